//! Precomputed counts and series for one run, shared by every identity.
//!
//! Lookups take signed arguments and extend by zero below the range:
//! every counter vanishes at negative weight, the spt-type counters also
//! vanish at weight 0, and the base counters are 1 there.

use rayon::prelude::*;
use sptk_core::partition::{count_base, BaseKind};
use sptk_core::qseries::{self, genfun, theorem_rhs, GenFlavor, Series, Theorem};
use sptk_core::spt::{count_row, CountBundle, Family};

use crate::error::VerifyError;

pub struct Tables {
    k_max: u32,
    n_max: u32,
    /// `[n][k - 1]`, n from 0.
    d: Vec<Vec<CountBundle>>,
    dos: Vec<Vec<CountBundle>>,
    /// Indexed by `BaseKind` position in `BaseKind::ALL`, then n.
    base: Vec<Vec<i64>>,
    products: Vec<Series>,
    /// `[flavor][k - 1]`.
    genfuns: Vec<Vec<Series>>,
    /// `[theorem][k - 1]`.
    rhs: Vec<Vec<Series>>,
}

fn rows(family: Family, n_max: u32, k_max: u32) -> Vec<Vec<CountBundle>> {
    (0..=n_max).into_par_iter().map(|n| count_row(family, n, k_max)).collect()
}

impl Tables {
    pub fn build(k_max: u32, n_max: u32) -> Result<Self, VerifyError> {
        let n = n_max as usize;
        let ((d, dos), base) = rayon::join(
            || rayon::join(|| rows(Family::D, n_max, k_max), || rows(Family::Do, n_max, k_max)),
            || {
                BaseKind::ALL
                    .par_iter()
                    .map(|&kind| (0..=n_max).map(|m| count_base(kind, m)).collect())
                    .collect()
            },
        );
        let products = vec![
            qseries::distinct_parts(n),
            qseries::distinct_even_parts(n),
            qseries::distinct_odd_parts(n),
            qseries::distinct_odd_parts_signed(n),
        ];
        let genfuns = GenFlavor::ALL
            .par_iter()
            .map(|&f| (1..=k_max).map(|k| genfun(f, k, n)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let rhs = Theorem::ALL
            .par_iter()
            .map(|&t| (1..=k_max).map(|k| theorem_rhs(t, k, n)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { k_max, n_max, d, dos, base, products, genfuns, rhs })
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    fn bundle(&self, family: Family, k: u32, n: i64) -> CountBundle {
        assert!((1..=self.k_max).contains(&k), "k = {k} outside the table (k_max = {})", self.k_max);
        assert!(n <= self.n_max as i64, "n = {n} outside the table (n_max = {})", self.n_max);
        if n < 0 {
            return CountBundle::ZERO;
        }
        let rows = match family {
            Family::D => &self.d,
            Family::Do => &self.dos,
        };
        rows[n as usize][k as usize - 1]
    }

    /// spt k_d(n), with A₀ / A₁ / signed available through [`Tables::d_bundle`].
    pub fn spt_d(&self, k: u32, n: i64) -> i64 {
        self.bundle(Family::D, k, n).total
    }

    pub fn d_bundle(&self, k: u32, n: i64) -> CountBundle {
        self.bundle(Family::D, k, n)
    }

    pub fn do_bundle(&self, k: u32, n: i64) -> CountBundle {
        self.bundle(Family::Do, k, n)
    }

    pub fn spt_do(&self, k: u32, n: i64) -> i64 {
        self.bundle(Family::Do, k, n).total
    }

    /// spt k'_do(n) = B₀(k, n) − B₁(k, n).
    pub fn spt_do_signed(&self, k: u32, n: i64) -> i64 {
        self.bundle(Family::Do, k, n).signed
    }

    pub fn b0(&self, k: u32, n: i64) -> i64 {
        self.bundle(Family::Do, k, n).even_t
    }

    pub fn b1(&self, k: u32, n: i64) -> i64 {
        self.bundle(Family::Do, k, n).odd_t
    }

    pub fn base(&self, kind: BaseKind, n: i64) -> i64 {
        assert!(n <= self.n_max as i64, "n = {n} outside the table (n_max = {})", self.n_max);
        if n < 0 {
            return 0;
        }
        self.base[base_index(kind)][n as usize]
    }

    pub fn pd(&self, n: i64) -> i64 {
        self.base(BaseKind::Pd, n)
    }

    pub fn pde(&self, n: i64) -> i64 {
        self.base(BaseKind::Pde, n)
    }

    pub fn pdo(&self, n: i64) -> i64 {
        self.base(BaseKind::Pdo, n)
    }

    /// p'_do(n): even length minus odd length.
    pub fn pdo_signed(&self, n: i64) -> i64 {
        self.base(BaseKind::PdoSigned, n)
    }

    /// Coefficient of qⁿ in the product generating `kind`.
    pub fn product_coeff(&self, kind: BaseKind, n: u32) -> i64 {
        self.products[base_index(kind)].coeff(n as usize)
    }

    pub fn genfun_coeff(&self, flavor: GenFlavor, k: u32, n: u32) -> i64 {
        let i = GenFlavor::ALL.iter().position(|&f| f == flavor).unwrap();
        self.genfuns[i][k as usize - 1].coeff(n as usize)
    }

    pub fn rhs_coeff(&self, theorem: Theorem, k: u32, n: u32) -> i64 {
        let i = Theorem::ALL.iter().position(|&t| t == theorem).unwrap();
        self.rhs[i][k as usize - 1].coeff(n as usize)
    }

    /// The enumerated counter a generating function flavor describes.
    pub fn enumerated(&self, flavor: GenFlavor, k: u32, n: i64) -> i64 {
        match flavor {
            GenFlavor::SptKd => self.d_bundle(k, n).total,
            GenFlavor::SptKdSigned => self.d_bundle(k, n).signed,
            GenFlavor::SptKdo => self.do_bundle(k, n).total,
            GenFlavor::SptKdoSigned => self.do_bundle(k, n).signed,
        }
    }
}

fn base_index(kind: BaseKind) -> usize {
    BaseKind::ALL.iter().position(|&k| k == kind).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_extension() {
        let t = Tables::build(3, 12).unwrap();
        assert_eq!(t.spt_d(1, 0), 0);
        assert_eq!(t.spt_d(2, -3), 0);
        assert_eq!(t.pd(0), 1);
        assert_eq!(t.pdo_signed(0), 1);
        assert_eq!(t.pde(-1), 0);
    }

    #[test]
    fn spot_values() {
        let t = Tables::build(2, 6).unwrap();
        assert_eq!(t.spt_d(2, 4), 2);
        assert_eq!(t.spt_do(1, 3), 2);
        assert_eq!(t.spt_do_signed(2, 5), 0);
        assert_eq!((t.b0(1, 5), t.b1(1, 5)), (1, 2));
        assert_eq!(t.pd(5), 3);
        assert_eq!(t.pdo_signed(5), -1);
    }

    #[test]
    #[should_panic(expected = "outside the table")]
    fn lookups_above_range_panic() {
        Tables::build(2, 6).unwrap().spt_d(3, 2);
    }
}
