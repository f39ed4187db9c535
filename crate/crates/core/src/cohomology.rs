//! Cocycle spaces and Betti numbers with trivial coefficients.
//!
//! The differential preserves the degree `m` of a monomial and raises its
//! topological degree `k` by one, so `d: Λᵏ → Λᵏ⁺¹` is block diagonal with one
//! block `Λᵏ_m → Λᵏ⁺¹_m` per degree. Ranks are computed block by block and
//! cached; blocks are independent and are filled in parallel.
//!
//! `b_k = dim Z_k + dim Z_{k−1} − C(n, k−1)`, which is `dim Z_k − dim B_k`
//! rewritten with `dim B_k = C(n, k−1) − dim Z_{k−1}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::algebra::{involution_f, VergneAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{basis, basis_graded, degree_range, Form, Monomial};
use crate::gf2::BitMatrix;
use crate::operator::{matrix_of, Derivation, LinearOperator};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[derive(Clone, Copy, Debug)]
struct Block {
    dim: usize,
    rank: usize,
}

/// The cochain complex of one algebra, with cached per-degree block ranks.
///
/// Safe to share across threads: each block is computed at most once and
/// concurrent readers see the same value.
pub struct Cohomology {
    algebra: VergneAlgebra,
    d: Derivation,
    max_m: usize,
    blocks: Vec<OnceLock<Block>>,
}

impl Cohomology {
    pub fn new(g: &VergneAlgebra) -> Self {
        let n = g.dim();
        let max_m = n * (n + 1) / 2;
        Cohomology {
            algebra: g.clone(),
            d: g.differential(),
            max_m,
            blocks: (0..(n + 1) * (max_m + 1)).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn algebra(&self) -> &VergneAlgebra {
        &self.algebra
    }

    fn n(&self) -> usize {
        self.algebra.dim()
    }

    /// `d` restricted to `Λᵏ_m → Λᵏ⁺¹_m`.
    pub fn block_matrix(&self, k: usize, m: usize) -> BitMatrix {
        let n = self.n();
        let domain = basis_graded(n, k, m);
        let codomain = basis_graded(n, k + 1, m);
        matrix_of(&self.d, &domain, &codomain).expect("d maps Λᵏ_m into Λᵏ⁺¹_m")
    }

    fn block(&self, k: usize, m: usize) -> Block {
        if k > self.n() || m > self.max_m {
            return Block { dim: 0, rank: 0 };
        }
        *self.blocks[k * (self.max_m + 1) + m].get_or_init(|| {
            let matrix = self.block_matrix(k, m);
            Block { dim: matrix.cols(), rank: matrix.rank() }
        })
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.n() {
            return Err(Error::TopDegreeOutOfRange { k, min: 0, max: self.n() });
        }
        Ok(())
    }

    /// `dim Z_k = dim ker(d: Λᵏ → Λᵏ⁺¹)`.
    pub fn cocycle_dim(&self, k: usize) -> Result<usize> {
        self.check_k(k)?;
        Ok(degree_range(self.n(), k)
            .map(|m| {
                let b = self.block(k, m);
                b.dim - b.rank
            })
            .sum())
    }

    /// `dim Hᵏ_m`.
    pub fn graded_betti(&self, k: usize, m: usize) -> Result<usize> {
        self.check_k(k)?;
        let here = self.block(k, m);
        let incoming = if k == 0 { 0 } else { self.block(k - 1, m).rank };
        Ok(here.dim - here.rank - incoming)
    }

    /// Fills every block, in parallel.
    pub fn populate(&self) {
        let n = self.n();
        let jobs: Vec<(usize, usize)> =
            (0..=n).flat_map(|k| degree_range(n, k).map(move |m| (k, m))).collect();
        jobs.par_iter().for_each(|&(k, m)| {
            self.block(k, m);
        });
    }

    pub fn betti(&self) -> BettiTable {
        self.populate();
        let n = self.n();
        let z: Vec<usize> = (0..=n).map(|k| self.cocycle_dim(k).expect("k in range")).collect();
        let mut b = vec![1usize; n + 1];
        for k in 1..=n {
            b[k] = z[k] + z[k - 1] - binomial(n, k - 1);
        }
        let mut graded = BTreeMap::new();
        for k in 0..=n {
            for m in degree_range(n, k) {
                let h = self.graded_betti(k, m).expect("k in range");
                if h != 0 {
                    graded.insert((k, m), h);
                }
            }
        }
        let table = BettiTable { n, betti: b, graded, cocycle_dims: z };
        debug_assert!(table.violations().is_empty(), "{:?}", table.violations());
        table
    }

    /// A basis of the homogeneous cocycles in `Λᵏ_m`.
    pub fn cocycle_basis(&self, k: usize, m: usize) -> Result<Vec<Form>> {
        self.check_k(k)?;
        let n = self.n();
        let domain = basis_graded(n, k, m);
        Ok(self
            .block_matrix(k, m)
            .kernel_basis()
            .into_iter()
            .map(|v| Form::from_monomials(n, v.into_iter().map(|c| domain[c])))
            .collect())
    }
}

/// Betti numbers, their refinement by degree, and cocycle-space dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    /// `b₀ … bₙ`.
    pub betti: Vec<usize>,
    /// Nonzero `dim Hᵏ_m`, keyed by `(k, m)`.
    pub graded: BTreeMap<(usize, usize), usize>,
    /// `dim Z₀ … dim Zₙ`.
    pub cocycle_dims: Vec<usize>,
}

impl BettiTable {
    /// Broken internal identities, as messages. Empty for a consistent table.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.betti.first() != Some(&1) {
            out.push(format!("b0 = {:?}", self.betti.first()));
        }
        for (k, &bk) in self.betti.iter().enumerate() {
            let graded_sum: usize =
                self.graded.range((k, 0)..(k + 1, 0)).map(|(_, &v)| v).sum();
            if graded_sum != bk {
                out.push(format!("sum of graded b{k} is {graded_sum}, total is {bk}"));
            }
        }
        for &(k, m) in self.graded.keys() {
            if !degree_range(self.n, k).contains(&m) {
                out.push(format!("graded entry ({k},{m}) outside the degree range"));
            }
        }
        let euler: i64 = self
            .betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        if euler != 0 {
            out.push(format!("alternating sum of Betti numbers is {euler}"));
        }
        out
    }

    /// `dim Hᵏ_m`, zero when absent.
    pub fn graded(&self, k: usize, m: usize) -> usize {
        self.graded.get(&(k, m)).copied().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> Value {
        let mut graded = Map::new();
        for (&(k, m), &v) in &self.graded {
            graded.insert(format!("{k},{m}"), json!(v));
        }
        json!({
            "n": self.n,
            "betti": self.betti,
            "graded": graded,
            "cocycle_dims": self.cocycle_dims,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// One row per `k`: `k,betti,cocycle_dim,graded` where `graded` lists
    /// `m:dim` pairs separated by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,betti,cocycle_dim,graded\n");
        for k in 0..=self.n {
            let graded: Vec<String> = self
                .graded
                .range((k, 0)..(k + 1, 0))
                .map(|(&(_, m), &v)| format!("{m}:{v}"))
                .collect();
            let _ = writeln!(out, "{k},{},{},{}", self.betti[k], self.cocycle_dims[k], graded.join(";"));
        }
        out
    }
}

/// `dim Z_k` of `g`.
pub fn cocycle_dim(g: &VergneAlgebra, k: usize) -> Result<usize> {
    Cohomology::new(g).cocycle_dim(k)
}

pub fn betti(g: &VergneAlgebra) -> BettiTable {
    Cohomology::new(g).betti()
}

pub fn graded_betti(g: &VergneAlgebra, k: usize, m: usize) -> Result<usize> {
    Cohomology::new(g).graded_betti(k, m)
}

/// `dim Z_k` from the single unsliced matrix of `d: Λᵏ → Λᵏ⁺¹`.
pub fn cocycle_dim_full(g: &VergneAlgebra, k: usize) -> Result<usize> {
    let n = g.dim();
    if k > n {
        return Err(Error::TopDegreeOutOfRange { k, min: 0, max: n });
    }
    let m = matrix_of(&g.differential(), &basis(n, k), &basis(n, k + 1))?;
    Ok(m.nullity())
}

/// The first basis `k`-monomial `h` with `d₂(f(h)) ≠ f(d₁(h))`, where `d₁`, `d₂`
/// are the differentials of `g1`, `g2`.
pub fn commuting_square_counterexample(
    g1: &VergneAlgebra,
    g2: &VergneAlgebra,
    k: usize,
) -> Result<Option<Monomial>> {
    let n = g1.dim();
    if g2.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: g2.dim() });
    }
    if !(2..=n).contains(&k) {
        return Err(Error::TopDegreeOutOfRange { k, min: 2, max: n });
    }
    let d1 = g1.differential();
    let d2 = g2.differential();
    let bad = basis(n, k).into_par_iter().find_first(|&h| {
        let h_form = Form::from_monomial(n, h);
        let lhs = d2.apply(&involution_f(&h_form).expect("k in range"));
        let rhs = involution_f(&d1.apply_monomial(h)).expect("k + 1 in range or zero");
        lhs != rhs
    });
    Ok(bad)
}

/// Whether `d₂ ∘ f = f ∘ d₁` on every basis monomial of topological degree `k`.
pub fn verify_commuting_square(g1: &VergneAlgebra, g2: &VergneAlgebra, k: usize) -> Result<bool> {
    Ok(commuting_square_counterexample(g1, g2, k)?.is_none())
}
