//! Every identity the runner checks, as data: an id, the statement, the
//! parameter grid with its validity bounds, and an evaluator returning
//! `(lhs, rhs)` for each equation at a cell.

use std::collections::BTreeMap;

use sptk_core::partition::BaseKind;
use sptk_core::qseries::{GenFlavor, Theorem};

use crate::config::RunConfig;
use crate::error::VerifyError;
use crate::tables::Tables;

/// One parameter cell. `x` is `n` for weight grids and `t` for lemma grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub k: u32,
    pub x: u32,
}

/// Parameter range of an identity, in terms of the run bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    /// `n ∈ [n_min, n_max]` at the fixed multiplicity `k` (0 when no k is involved).
    N { n_min: u32, k: u32 },
    /// `k ∈ [k_min, k_max − slack]`, `n ∈ [n_min, n_max]`. Slack 1 is for
    /// identities that also read multiplicity `k + 1`.
    KN { k_min: u32, slack: u32, n_min: u32 },
    /// `k ∈ [1, k_max − 1]`, `t ∈ [1, t_max]`; weights reach `2t + 1`.
    KT,
    /// `t ∈ [1, t_max]` at multiplicity 1.
    T,
}

pub type Params = BTreeMap<String, u32>;

impl Grid {
    /// The cells in row-major order together with the bounds used.
    /// An empty range is a configuration error: the run bounds fall below
    /// the identity's validity bound.
    pub fn cells(&self, id: &str, cfg: &RunConfig) -> Result<(Params, Vec<Cell>), VerifyError> {
        let (k_range, x_name, x_range) = match *self {
            Grid::N { n_min, k } => {
                if k > cfg.k_max {
                    return Err(VerifyError::Config(format!("{id} needs k_max >= {k}, got {}", cfg.k_max)));
                }
                (None, "n", (n_min, cfg.n_max))
            }
            Grid::KN { k_min, slack, n_min } => (Some((k_min, cfg.k_max.saturating_sub(slack))), "n", (n_min, cfg.n_max)),
            Grid::KT => (Some((1, cfg.k_max - 1)), "t", (1, cfg.t_max)),
            Grid::T => (None, "t", (1, cfg.t_max)),
        };
        let mut params = Params::new();
        let ks: Vec<u32> = match k_range {
            Some((lo, hi)) => {
                if lo > hi {
                    return Err(VerifyError::Config(format!("{id} needs k in [{lo}, k_max], got k_max = {}", cfg.k_max)));
                }
                params.insert("k_min".into(), lo);
                params.insert("k_max".into(), hi);
                (lo..=hi).collect()
            }
            None => vec![match *self {
                Grid::N { k, .. } => k,
                _ => 1,
            }],
        };
        let (lo, hi) = x_range;
        if lo > hi {
            return Err(VerifyError::Config(format!("{id} holds for {x_name} >= {lo}, but {x_name}_max = {hi}")));
        }
        params.insert(format!("{x_name}_min"), lo);
        params.insert(format!("{x_name}_max"), hi);
        let cells = ks.iter().flat_map(|&k| (lo..=hi).map(move |x| Cell { k, x })).collect();
        Ok((params, cells))
    }

    /// How a cell is shown in failure messages.
    pub fn describe(&self, cell: Cell) -> String {
        match self {
            Grid::N { .. } => format!("n={}", cell.x),
            Grid::KN { .. } => format!("k={}, n={}", cell.k, cell.x),
            Grid::KT => format!("k={}, t={}", cell.k, cell.x),
            Grid::T => format!("t={}", cell.x),
        }
    }
}

pub type Evaluator = fn(&Tables, Cell) -> Vec<(i64, i64)>;

#[derive(Debug)]
pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
    pub grid: Grid,
    pub eval: Evaluator,
}

fn sign(m: i64) -> i64 {
    if m.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn series_streams(t: &Tables, theorem: Theorem, c: Cell) -> Vec<(i64, i64)> {
    let enumerated = t.enumerated(theorem.flavor(), c.k, c.x as i64);
    vec![(enumerated, t.genfun_coeff(theorem.flavor(), c.k, c.x)), (enumerated, t.rhs_coeff(theorem, c.k, c.x))]
}

fn genfun_stream(t: &Tables, flavor: GenFlavor, c: Cell) -> Vec<(i64, i64)> {
    vec![(t.enumerated(flavor, c.k, c.x as i64), t.genfun_coeff(flavor, c.k, c.x))]
}

fn base_stream(t: &Tables, kind: BaseKind, c: Cell) -> Vec<(i64, i64)> {
    vec![(t.base(kind, c.x as i64), t.product_coeff(kind, c.x))]
}

pub const CATALOG: &[Identity] = &[
    Identity {
        id: "THM1-1A",
        statement: "sptk_d(n) + spt(k-1)_d(n) = spt(k-1)_d(n-k+1) + p_d(n-k+1)",
        grid: Grid::KN { k_min: 2, slack: 0, n_min: 1 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            vec![(t.spt_d(k, n) + t.spt_d(k - 1, n), t.spt_d(k - 1, n - ki + 1) + t.pd(n - ki + 1))]
        },
    },
    Identity {
        id: "THM1-1B",
        statement: "spt1_d(n) = p_d(n)",
        grid: Grid::N { n_min: 2, k: 1 },
        eval: |t, c| vec![(t.spt_d(1, c.x as i64), t.pd(c.x as i64))],
    },
    Identity {
        id: "COR5A",
        statement: "spt2_d(n) = 2p_d(n-1) - p_d(n)",
        grid: Grid::N { n_min: 2, k: 2 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![(t.spt_d(2, n), 2 * t.pd(n - 1) - t.pd(n))]
        },
    },
    Identity {
        id: "COR5B",
        statement: "spt3_d(n) = 2p_d(n-3) - 2p_d(n-1) + p_d(n)",
        grid: Grid::N { n_min: 4, k: 3 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![(t.spt_d(3, n), 2 * t.pd(n - 3) - 2 * t.pd(n - 1) + t.pd(n))]
        },
    },
    Identity {
        id: "COR7",
        statement: "spt1_do(n) = 2p_de(n-1) + p_do(n-1)",
        grid: Grid::N { n_min: 2, k: 1 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![(t.spt_do(1, n), 2 * t.pde(n - 1) + t.pdo(n - 1))]
        },
    },
    Identity {
        id: "COR8A",
        statement: "spt1'_do(n) = -p'_do(n-1)",
        grid: Grid::N { n_min: 2, k: 1 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![(t.spt_do_signed(1, n), -t.pdo_signed(n - 1))]
        },
    },
    Identity {
        id: "COR8B",
        statement: "spt2'_do(n) = p'_do(n-4) - p'_do(n-3) - p'_do(n-2)",
        grid: Grid::N { n_min: 5, k: 2 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![(t.spt_do_signed(2, n), t.pdo_signed(n - 4) - t.pdo_signed(n - 3) - t.pdo_signed(n - 2))]
        },
    },
    Identity {
        id: "THM2-2A",
        statement: "spt(k-1)'_do(n-1) - sptk'_do(n) = spt(k-1)'_do(n-2k+1) + p'_do(n-2k+1); \
                    sptk_do(n) + spt(k-1)_do(n-1) = spt(k-1)_do(n-2k+1) + 2p_de(n-k) + p_do(n-2k+1)",
        grid: Grid::KN { k_min: 2, slack: 0, n_min: 1 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            let m = n - 2 * ki + 1;
            vec![
                (t.spt_do_signed(k - 1, n - 1) - t.spt_do_signed(k, n), t.spt_do_signed(k - 1, m) + t.pdo_signed(m)),
                (t.spt_do(k, n) + t.spt_do(k - 1, n - 1), t.spt_do(k - 1, m) + 2 * t.pde(n - ki) + t.pdo(m)),
            ]
        },
    },
    Identity {
        id: "THM2-2B",
        statement: "spt1_do(n) = 2p_de(n-1) + p_do(n-1); spt1'_do(n) = -p'_do(n-1)",
        grid: Grid::N { n_min: 2, k: 1 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![
                (t.spt_do(1, n), 2 * t.pde(n - 1) + t.pdo(n - 1)),
                (t.spt_do_signed(1, n), -t.pdo_signed(n - 1)),
            ]
        },
    },
    Identity {
        id: "LEM1",
        statement: "B0(k+1,2t+1) + B1(k,2t) = B1(k,2t-2k) + p_de(2t-k)",
        grid: Grid::KT,
        eval: |t, c| {
            let (k, w, ki) = (c.k, 2 * c.x as i64, c.k as i64);
            vec![(t.b0(k + 1, w + 1) + t.b1(k, w), t.b1(k, w - 2 * ki) + t.pde(w - ki))]
        },
    },
    Identity {
        id: "LEM2",
        statement: "B0(k+1,2t) + B1(k,2t-1) = B1(k,2t-2k-1) + p_de(2t-k-1) + p_do(2t-2k-1)",
        grid: Grid::KT,
        eval: |t, c| {
            let (k, w, ki) = (c.k, 2 * c.x as i64, c.k as i64);
            let m = w - 2 * ki - 1;
            vec![(t.b0(k + 1, w) + t.b1(k, w - 1), t.b1(k, m) + t.pde(w - ki - 1) + t.pdo(m))]
        },
    },
    Identity {
        id: "LEM3",
        statement: "B0(k,2t-1) + B1(k+1,2t) = B0(k,2t-2k-1) + p_de(2t-k-1)",
        grid: Grid::KT,
        eval: |t, c| {
            let (k, w, ki) = (c.k, 2 * c.x as i64, c.k as i64);
            vec![(t.b0(k, w - 1) + t.b1(k + 1, w), t.b0(k, w - 2 * ki - 1) + t.pde(w - ki - 1))]
        },
    },
    Identity {
        id: "LEM4",
        statement: "B0(k,2t) + B1(k+1,2t+1) = B0(k,2t-2k) + p_de(2t-k) + p_do(2t-2k)",
        grid: Grid::KT,
        eval: |t, c| {
            let (k, w, ki) = (c.k, 2 * c.x as i64, c.k as i64);
            let m = w - 2 * ki;
            vec![(t.b0(k, w) + t.b1(k + 1, w + 1), t.b0(k, m) + t.pde(w - ki) + t.pdo(m))]
        },
    },
    Identity {
        id: "LEM5",
        statement: "B0(1,2t+1) = p_de(2t); B0(1,2t) = p_de(2t-1) + p_do(2t-1); \
                    B1(1,2t) = p_de(2t-1); B1(1,2t+1) = p_de(2t) + p_do(2t)",
        grid: Grid::T,
        eval: |t, c| {
            let w = 2 * c.x as i64;
            vec![
                (t.b0(1, w + 1), t.pde(w)),
                (t.b0(1, w), t.pde(w - 1) + t.pdo(w - 1)),
                (t.b1(1, w), t.pde(w - 1)),
                (t.b1(1, w + 1), t.pde(w) + t.pdo(w)),
            ]
        },
    },
    Identity {
        id: "LEMPAR-1",
        statement: "2B0(k+1,n) + 2B1(k,n-1) = 2B1(k,n-2k-1) + 2p_de(n-k-1) + (1+(-1)^(n-2k)) p_do(n-2k-1)",
        grid: Grid::KN { k_min: 1, slack: 1, n_min: 2 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            let m = n - 2 * ki - 1;
            vec![(
                2 * t.b0(k + 1, n) + 2 * t.b1(k, n - 1),
                2 * t.b1(k, m) + 2 * t.pde(n - ki - 1) + (1 + sign(n - 2 * ki)) * t.pdo(m),
            )]
        },
    },
    Identity {
        id: "LEMPAR-2",
        statement: "2B0(k,n-1) + 2B1(k+1,n) = 2B0(k,n-2k-1) + 2p_de(n-k-1) + (1+(-1)^(n-2k-1)) p_do(n-2k-1)",
        grid: Grid::KN { k_min: 1, slack: 1, n_min: 2 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            let m = n - 2 * ki - 1;
            vec![(
                2 * t.b0(k, n - 1) + 2 * t.b1(k + 1, n),
                2 * t.b0(k, m) + 2 * t.pde(n - ki - 1) + (1 + sign(m)) * t.pdo(m),
            )]
        },
    },
    Identity {
        id: "LEM5PAR",
        statement: "2B0(1,n) = 2p_de(n-1) + (1+(-1)^n) p_do(n-1); 2B1(1,n) = 2p_de(n-1) + (1-(-1)^n) p_do(n-1)",
        grid: Grid::N { n_min: 2, k: 1 },
        eval: |t, c| {
            let n = c.x as i64;
            vec![
                (2 * t.b0(1, n), 2 * t.pde(n - 1) + (1 + sign(n)) * t.pdo(n - 1)),
                (2 * t.b1(1, n), 2 * t.pde(n - 1) + (1 - sign(n)) * t.pdo(n - 1)),
            ]
        },
    },
    Identity {
        id: "EQTHM2-1",
        statement: "B0(k-1,n-2k+1) - B1(k-1,n-2k+1) + (-1)^(n-2k+1) p_do(n-2k+1) \
                    = B0(k-1,n-1) - B1(k-1,n-1) - B0(k,n) + B1(k,n)",
        grid: Grid::KN { k_min: 2, slack: 0, n_min: 1 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            let m = n - 2 * ki + 1;
            vec![(
                t.b0(k - 1, m) - t.b1(k - 1, m) + sign(m) * t.pdo(m),
                t.b0(k - 1, n - 1) - t.b1(k - 1, n - 1) - t.b0(k, n) + t.b1(k, n),
            )]
        },
    },
    Identity {
        id: "EQTHM2-2",
        statement: "B0(k,n) + B1(k,n) + B0(k-1,n-1) + B1(k-1,n-1) \
                    = B0(k-1,n-2k+1) + B1(k-1,n-2k+1) + 2p_de(n-k) + p_do(n-2k+1)",
        grid: Grid::KN { k_min: 2, slack: 0, n_min: 1 },
        eval: |t, c| {
            let (k, n, ki) = (c.k, c.x as i64, c.k as i64);
            let m = n - 2 * ki + 1;
            vec![(
                t.b0(k, n) + t.b1(k, n) + t.b0(k - 1, n - 1) + t.b1(k - 1, n - 1),
                t.b0(k - 1, m) + t.b1(k - 1, m) + 2 * t.pde(n - ki) + t.pdo(m),
            )]
        },
    },
    Identity {
        id: "GF-SPTKD",
        statement: "sum sptk_d(n) q^n = sum_s q^(ks) (-q^(s+1);q)_inf",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| genfun_stream(t, GenFlavor::SptKd, c),
    },
    Identity {
        id: "GF-SPTKD-SIGNED",
        statement: "sum sptk'_d(n) q^n = sum_s q^(ks) (q^(s+1);q)_inf",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| genfun_stream(t, GenFlavor::SptKdSigned, c),
    },
    Identity {
        id: "GF-SPTKDO",
        statement: "sum sptk_do(n) q^n = sum_s q^(ks) (-q^(s+1);q^2)_inf",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| genfun_stream(t, GenFlavor::SptKdo, c),
    },
    Identity {
        id: "GF-SPTKDO-SIGNED",
        statement: "sum sptk'_do(n) q^n = sum_s q^(ks) (q^(s+1);q^2)_inf",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| genfun_stream(t, GenFlavor::SptKdoSigned, c),
    },
    Identity {
        id: "BASE-PD",
        statement: "sum p_d(n) q^n = (-q;q)_inf",
        grid: Grid::N { n_min: 0, k: 0 },
        eval: |t, c| base_stream(t, BaseKind::Pd, c),
    },
    Identity {
        id: "BASE-PDE",
        statement: "sum p_de(n) q^n = (-q^2;q^2)_inf",
        grid: Grid::N { n_min: 0, k: 0 },
        eval: |t, c| base_stream(t, BaseKind::Pde, c),
    },
    Identity {
        id: "BASE-PDO",
        statement: "sum p_do(n) q^n = (-q;q^2)_inf",
        grid: Grid::N { n_min: 0, k: 0 },
        eval: |t, c| base_stream(t, BaseKind::Pdo, c),
    },
    Identity {
        id: "BASE-PDO-SIGNED",
        statement: "sum p'_do(n) q^n = (q;q^2)_inf",
        grid: Grid::N { n_min: 0, k: 0 },
        eval: |t, c| base_stream(t, BaseKind::PdoSigned, c),
    },
    Identity {
        id: "THM1",
        statement: "sum sptk_d(n) q^n = P_k(q) (-q;q)_inf + (-1)^k (q;q)_(k-1)",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| series_streams(t, Theorem::Thm1, c),
    },
    Identity {
        id: "THM2",
        statement: "sum sptk'_do(n) q^n = T_k(q) (q;q^2)_inf + 2q^k (q^2;q^2)_(k-1)",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| series_streams(t, Theorem::Thm2, c),
    },
    Identity {
        id: "THM3",
        statement: "sum sptk_do(n) q^n = V_k(q) (-q^2;q^2)_inf + W_k(q) (-q;q^2)_inf + 2(-q)^k (q^2;q^2)_(k-1)",
        grid: Grid::KN { k_min: 1, slack: 0, n_min: 1 },
        eval: |t, c| series_streams(t, Theorem::Thm3, c),
    },
];

pub fn ids() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

/// Case-insensitive lookup.
pub fn lookup(id: &str) -> Result<&'static Identity, VerifyError> {
    CATALOG
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| VerifyError::UnknownIdentity { id: id.to_string(), catalog: ids() })
}
