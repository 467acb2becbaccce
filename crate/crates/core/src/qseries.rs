//! Exact truncated power series in q with integer coefficients.
//!
//! A [`Series`] stores `c[0..=N]` and represents `Σ c_n qⁿ mod q^{N+1}`.
//! Binary operations combine at the smaller truncation. Coefficient
//! arithmetic is plain `i64`; the workspace enables overflow checks in every
//! profile so growth can never wrap silently.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;

/// Truncation used when callers do not choose one.
pub const DEFAULT_TRUNCATION: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<i64>,
}

impl Series {
    pub fn zero(truncation: usize) -> Self {
        Self { coeffs: vec![0; truncation + 1] }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(1, 0, truncation)
    }

    /// `c·q^e`, which is zero when `e` exceeds the truncation.
    pub fn monomial(c: i64, e: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        if e <= truncation {
            s.coeffs[e] = c;
        }
        s
    }

    /// Pads with zeros or drops terms so the result has the given truncation.
    pub fn from_coeffs(mut coeffs: Vec<i64>, truncation: usize) -> Self {
        coeffs.resize(truncation + 1, 0);
        Self { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of qⁿ; zero above the truncation.
    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    /// Index of the highest non-zero coefficient kept.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn truncated(&self, truncation: usize) -> Self {
        let keep = truncation.min(self.truncation());
        Self { coeffs: self.coeffs[..=keep].to_vec() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&x| x * c).collect() }
    }

    /// Multiplies by `q^by`.
    pub fn shift(&self, by: i64) -> Result<Self, SeriesError> {
        let by = usize::try_from(by).map_err(|_| SeriesError::NegativeShift(by))?;
        Ok(self.shift_up(by))
    }

    pub fn shift_up(&self, by: usize) -> Self {
        let n = self.truncation();
        let mut out = Self::zero(n);
        if by <= n {
            out.coeffs[by..].copy_from_slice(&self.coeffs[..=n - by]);
        }
        out
    }

    /// Multiplies in place by `(1 - q^e)` or `(1 + q^e)`.
    fn mul_binomial(&mut self, sign: PochSign, e: usize) {
        debug_assert!(e >= 1);
        if e > self.truncation() {
            return;
        }
        for i in (e..self.coeffs.len()).rev() {
            let lower = self.coeffs[i - e];
            match sign {
                PochSign::Pos => self.coeffs[i] -= lower,
                PochSign::Neg => self.coeffs[i] += lower,
            }
        }
    }

    fn zip_with(&self, other: &Series, f: impl Fn(i64, i64) -> i64) -> Series {
        let n = self.truncation().min(other.truncation());
        Series { coeffs: (0..=n).map(|i| f(self.coeffs[i], other.coeffs[i])).collect() }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.truncation().min(rhs.truncation());
        let mut out = vec![0i64; n + 1];
        for (i, &a) in self.coeffs[..=n].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

/// Whether a Pochhammer base is `q^a` or `−q^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochSign {
    /// `(q^a; q^b)`: factors `1 − q^{a+jb}`.
    Pos,
    /// `(−q^a; q^b)`: factors `1 + q^{a+jb}`.
    Neg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factors {
    Finite(u32),
    Infinite,
}

/// `(±q^a; q^b)_m`, i.e. `Π_{j<m} (1 ∓ q^{a+jb})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochSpec {
    base_exp: u32,
    step: u32,
    sign: PochSign,
    factors: Factors,
}

impl PochSpec {
    pub fn new(sign: PochSign, base_exp: u32, step: u32, factors: Factors) -> Result<Self, SeriesError> {
        if base_exp == 0 {
            return Err(SeriesError::ZeroExponent("base exponent"));
        }
        if step == 0 {
            return Err(SeriesError::ZeroExponent("step"));
        }
        Ok(Self { base_exp, step, sign, factors })
    }

    /// Infallible constructor for the fixed products used internally.
    fn of(sign: PochSign, base_exp: u32, step: u32, factors: Factors) -> Self {
        Self::new(sign, base_exp, step, factors).expect("exponents are positive")
    }

    pub fn base_exp(&self) -> u32 {
        self.base_exp
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn sign(&self) -> PochSign {
        self.sign
    }

    pub fn factors(&self) -> Factors {
        self.factors
    }
}

/// The truncated product for `spec`. Infinite products stop at the last
/// factor whose exponent is at most `truncation`.
pub fn pochhammer(spec: &PochSpec, truncation: usize) -> Series {
    let mut out = Series::one(truncation);
    let a = spec.base_exp as usize;
    let b = spec.step as usize;
    let mut j = 0usize;
    loop {
        if let Factors::Finite(m) = spec.factors {
            if j >= m as usize {
                break;
            }
        }
        let e = a + j * b;
        if e > truncation {
            break;
        }
        out.mul_binomial(spec.sign, e);
        j += 1;
    }
    out
}

/// `(−q;q)_∞`, generating function of p_d.
pub fn distinct_parts(truncation: usize) -> Series {
    pochhammer(&PochSpec::of(PochSign::Neg, 1, 1, Factors::Infinite), truncation)
}

/// `(−q²;q²)_∞`, generating function of p_de.
pub fn distinct_even_parts(truncation: usize) -> Series {
    pochhammer(&PochSpec::of(PochSign::Neg, 2, 2, Factors::Infinite), truncation)
}

/// `(−q;q²)_∞`, generating function of p_do.
pub fn distinct_odd_parts(truncation: usize) -> Series {
    pochhammer(&PochSpec::of(PochSign::Neg, 1, 2, Factors::Infinite), truncation)
}

/// `(q;q²)_∞`, generating function of p'_do.
pub fn distinct_odd_parts_signed(truncation: usize) -> Series {
    pochhammer(&PochSpec::of(PochSign::Pos, 1, 2, Factors::Infinite), truncation)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenFlavor {
    /// Σ spt k_d(n) qⁿ
    SptKd,
    /// Σ spt k'_d(n) qⁿ
    SptKdSigned,
    /// Σ spt k_do(n) qⁿ
    SptKdo,
    /// Σ spt k'_do(n) qⁿ
    SptKdoSigned,
}

impl GenFlavor {
    pub const ALL: [GenFlavor; 4] = [GenFlavor::SptKd, GenFlavor::SptKdSigned, GenFlavor::SptKdo, GenFlavor::SptKdoSigned];

    pub fn name(self) -> &'static str {
        match self {
            GenFlavor::SptKd => "SPTKD",
            GenFlavor::SptKdSigned => "SPTKD_SIGNED",
            GenFlavor::SptKdo => "SPTKDO",
            GenFlavor::SptKdoSigned => "SPTKDO_SIGNED",
        }
    }
}

/// `Σ_{s≥1} q^{ks} (±q^{s+1}; q or q²)_∞`, summed over `s ≤ N/k` (later
/// terms vanish mod q^{N+1}).
pub fn genfun(flavor: GenFlavor, k: u32, truncation: usize) -> Result<Series, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroK);
    }
    let (sign, step) = match flavor {
        GenFlavor::SptKd => (PochSign::Neg, 1),
        GenFlavor::SptKdSigned => (PochSign::Pos, 1),
        GenFlavor::SptKdo => (PochSign::Neg, 2),
        GenFlavor::SptKdoSigned => (PochSign::Pos, 2),
    };
    let k = k as usize;
    let mut total = Series::zero(truncation);
    for s in 1..=truncation / k {
        let tail = pochhammer(&PochSpec::of(sign, s as u32 + 1, step, Factors::Infinite), truncation);
        total = &total + &tail.shift_up(k * s);
    }
    Ok(total)
}

/// The polynomial families appearing in the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyFamily {
    P,
    T,
    V,
    W,
}

impl PolyFamily {
    /// Degree of the k-th member as a polynomial (k ≥ 1).
    pub fn degree(self, k: u32) -> usize {
        let k = k as usize;
        match self {
            PolyFamily::P => k * (k - 1) / 2,
            PolyFamily::T | PolyFamily::V | PolyFamily::W => k * k,
        }
    }
}

/// Evaluates the recurrence for `family` up to index `k`, truncated at `truncation`.
///
/// ```text
/// P_1 = 1,   P_k = (q^{k-1} - 1) P_{k-1} + q^{k-1}
/// T_1 = -q,  T_k = (q - q^{2k-1}) T_{k-1} - q^{2k-1}
/// V_1 = 2q,  V_k = (q^{2k-1} - q) V_{k-1} + 2q^k
/// W_1 = q,   W_k = (q^{2k-1} - q) W_{k-1} + q^{2k-1}
/// ```
pub fn poly_family(family: PolyFamily, k: u32, truncation: usize) -> Result<Series, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroK);
    }
    let n = truncation;
    let mono = |c: i64, e: usize| Series::monomial(c, e, n);
    let mut current = match family {
        PolyFamily::P => mono(1, 0),
        PolyFamily::T => mono(-1, 1),
        PolyFamily::V => mono(2, 1),
        PolyFamily::W => mono(1, 1),
    };
    for j in 2..=k as usize {
        let odd = 2 * j - 1;
        current = match family {
            PolyFamily::P => (mono(1, j - 1) - mono(1, 0)) * &current + mono(1, j - 1),
            PolyFamily::T => (mono(1, 1) - mono(1, odd)) * &current - mono(1, odd),
            PolyFamily::V => (mono(1, odd) - mono(1, 1)) * &current + mono(2, j),
            PolyFamily::W => (mono(1, odd) - mono(1, 1)) * &current + mono(1, odd),
        };
    }
    Ok(current)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `P_k (−q;q)_∞ + (−1)^k (q;q)_{k−1}` for Σ spt k_d(n) qⁿ.
    Thm1,
    /// `T_k (q;q²)_∞ + 2q^k (q²;q²)_{k−1}` for Σ spt k'_do(n) qⁿ.
    Thm2,
    /// `V_k (−q²;q²)_∞ + W_k (−q;q²)_∞ + 2(−q)^k (q²;q²)_{k−1}` for Σ spt k_do(n) qⁿ.
    Thm3,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Thm1, Theorem::Thm2, Theorem::Thm3];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "THM1",
            Theorem::Thm2 => "THM2",
            Theorem::Thm3 => "THM3",
        }
    }

    /// The generating function whose closed form this is.
    pub fn flavor(self) -> GenFlavor {
        match self {
            Theorem::Thm1 => GenFlavor::SptKd,
            Theorem::Thm2 => GenFlavor::SptKdoSigned,
            Theorem::Thm3 => GenFlavor::SptKdo,
        }
    }
}

/// Closed-form right-hand side for `theorem` at `k`, truncated at `truncation`.
pub fn theorem_rhs(theorem: Theorem, k: u32, truncation: usize) -> Result<Series, SeriesError> {
    if k == 0 {
        return Err(SeriesError::ZeroK);
    }
    let n = truncation;
    let sign_k: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
    let finite = |base: u32, step: u32| pochhammer(&PochSpec::of(PochSign::Pos, base, step, Factors::Finite(k - 1)), n);
    let rhs = match theorem {
        Theorem::Thm1 => {
            let p = poly_family(PolyFamily::P, k, n)?;
            p * distinct_parts(n) + finite(1, 1).scale(sign_k)
        }
        Theorem::Thm2 => {
            let t = poly_family(PolyFamily::T, k, n)?;
            t * distinct_odd_parts_signed(n) + finite(2, 2).shift_up(k as usize).scale(2)
        }
        Theorem::Thm3 => {
            let v = poly_family(PolyFamily::V, k, n)?;
            let w = poly_family(PolyFamily::W, k, n)?;
            v * distinct_even_parts(n)
                + w * distinct_odd_parts(n)
                + finite(2, 2).shift_up(k as usize).scale(2 * sign_k)
        }
    };
    Ok(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], n: usize) -> Series {
        Series::from_coeffs(c.to_vec(), n)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s(&[1, -1], 3) * s(&[1, 1], 3), s(&[1, 0, -1], 3));
        assert_eq!(Series::one(5).shift(3).unwrap(), s(&[0, 0, 0, 1], 5));
        assert_eq!(s(&[-1, 2], 4) * s(&[1, 1, 1, 2, 2], 4), s(&[-1, 1, 1, 0, 2], 4));
        assert_eq!(Series::one(5).shift(-1), Err(SeriesError::NegativeShift(-1)));
    }

    #[test]
    fn mixed_truncations_combine_at_minimum() {
        let a = s(&[1, 2, 3, 4, 5], 4);
        let b = s(&[1, 1], 2);
        assert_eq!((&a + &b).truncation(), 2);
        assert_eq!((&a * &b), s(&[1, 3, 5], 2));
        assert_eq!(a.shift_up(9), Series::zero(4));
    }

    #[test]
    fn pochhammer_examples() {
        let qq2 = PochSpec::new(PochSign::Pos, 1, 1, Factors::Finite(2)).unwrap();
        assert_eq!(pochhammer(&qq2, 4), s(&[1, -1, -1, 1], 4));
        assert_eq!(distinct_parts(5), s(&[1, 1, 1, 2, 2, 3], 5));
        assert_eq!(distinct_odd_parts_signed(6), s(&[1, -1, 0, -1, 1, -1, 1], 6));
        let empty = PochSpec::new(PochSign::Neg, 3, 2, Factors::Finite(0)).unwrap();
        assert_eq!(pochhammer(&empty, 7), Series::one(7));
    }

    #[test]
    fn pochhammer_rejects_zero_exponents() {
        assert!(PochSpec::new(PochSign::Pos, 0, 1, Factors::Infinite).is_err());
        assert!(PochSpec::new(PochSign::Pos, 1, 0, Factors::Infinite).is_err());
    }

    #[test]
    fn genfun_examples() {
        assert_eq!(genfun(GenFlavor::SptKd, 1, 5).unwrap(), s(&[0, 1, 1, 2, 2, 3], 5));
        assert_eq!(genfun(GenFlavor::SptKd, 2, 4).unwrap().coeff(4), 2);
        assert_eq!(genfun(GenFlavor::SptKdoSigned, 1, 4).unwrap().coeff(4), 1);
        assert!(genfun(GenFlavor::SptKd, 0, 4).is_err());
    }

    #[test]
    fn poly_family_examples() {
        assert_eq!(poly_family(PolyFamily::P, 1, 6).unwrap(), Series::one(6));
        assert_eq!(poly_family(PolyFamily::P, 2, 6).unwrap(), s(&[-1, 2], 6));
        assert_eq!(poly_family(PolyFamily::T, 2, 6).unwrap(), s(&[0, 0, -1, -1, 1], 6));
        assert_eq!(poly_family(PolyFamily::V, 1, 6).unwrap(), s(&[0, 2], 6));
        assert_eq!(poly_family(PolyFamily::W, 1, 6).unwrap(), s(&[0, 1], 6));
    }

    #[test]
    fn poly_degrees() {
        for k in 1..=8 {
            for fam in [PolyFamily::P, PolyFamily::T, PolyFamily::V, PolyFamily::W] {
                let p = poly_family(fam, k, 80).unwrap();
                assert_eq!(p.degree(), Some(fam.degree(k)), "{fam:?} k={k}");
            }
        }
    }

    #[test]
    fn theorem_rhs_examples() {
        assert_eq!(theorem_rhs(Theorem::Thm1, 1, 5).unwrap(), s(&[0, 1, 1, 2, 2, 3], 5));
        assert_eq!(theorem_rhs(Theorem::Thm1, 2, 4).unwrap().coeff(4), 2);
        let thm2 = theorem_rhs(Theorem::Thm2, 1, 4).unwrap();
        assert_eq!(thm2, s(&[0, 1, 1, 0, 1], 4));
        // spt1_do(3) = 2
        assert_eq!(theorem_rhs(Theorem::Thm3, 1, 6).unwrap().coeff(3), 2);
    }

    #[test]
    fn closed_forms_match_generating_functions() {
        for theorem in Theorem::ALL {
            for k in 1..=6 {
                let lhs = genfun(theorem.flavor(), k, 40).unwrap();
                let rhs = theorem_rhs(theorem, k, 40).unwrap();
                assert_eq!(lhs.coeffs()[1..], rhs.coeffs()[1..], "{theorem:?} k={k}");
                assert_eq!(rhs.coeff(0), 0);
            }
        }
    }
}
