//! Interval diagrams, the enhanced diagonal `ÃW_Δ`, cup-i products and
//! Steenrod squares on cochains, with closed forms on `BΣ₂` and `EΣ₂`.

use crate::binom::binom_mod2;
use crate::error::{Error, Result};
use crate::f2::FormalSum;
use crate::simplicial::{e_sigma2_cell, Cochain, Simplex, SpaceModel};

/// Cuts `0 ≤ k₁ < ... < k_{n+1} ≤ N` splitting `(0..N)` into the intervals
/// `I₁ = (0..k₁), I₂ = (k₁..k₂), ..., I_{n+2} = (k_{n+1}..N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalDiagram {
    pub total: usize,
    pub cuts: Vec<usize>,
}

impl IntervalDiagram {
    fn bounds(&self) -> Vec<usize> {
        let mut b = Vec::with_capacity(self.cuts.len() + 2);
        b.push(0);
        b.extend_from_slice(&self.cuts);
        b.push(self.total);
        b
    }

    /// Vertices of `I₁ ∪ I₃ ∪ ...`.
    pub fn odd_vertices(&self) -> Vec<usize> {
        self.vertices(0)
    }

    /// Vertices of `I₂ ∪ I₄ ∪ ...`.
    pub fn even_vertices(&self) -> Vec<usize> {
        self.vertices(1)
    }

    fn vertices(&self, parity: usize) -> Vec<usize> {
        let b = self.bounds();
        let mut out = Vec::new();
        for (i, w) in b.windows(2).enumerate() {
            if i % 2 == parity {
                out.extend(w[0]..=w[1]);
            }
        }
        out
    }
}

/// All diagrams for `cup_n` on an `N`-simplex; there are `C(N+1, n+1)`.
pub fn enumerate_diagrams(n: usize, total: usize) -> Vec<IntervalDiagram> {
    crate::simplicial::combinations(total + 1, n + 1)
        .into_iter()
        .map(|cuts| IntervalDiagram { total, cuts })
        .collect()
}

/// `ÃW_Δ(T^b x̃_n ⊗ u) = S^b Σ u(I_odd) ⊗ u(I_even)` over the diagrams of `u`.
pub fn aw_tilde_delta(
    n: usize,
    twisted: bool,
    model: &SpaceModel,
    u: &Simplex,
) -> FormalSum<(Simplex, Simplex)> {
    let total = model.dim(u);
    let mut out = FormalSum::zero();
    if model.is_degenerate(u) {
        return out;
    }
    for d in enumerate_diagrams(n, total) {
        let x = model.restrict(u, &d.odd_vertices());
        let y = model.restrict(u, &d.even_vertices());
        if model.is_degenerate(&x) || model.is_degenerate(&y) {
            continue;
        }
        out.toggle(if twisted { (y, x) } else { (x, y) });
    }
    out
}

/// `⟨α ⌣_n β, u⟩ = Σ ⟨α, u(I_odd)⟩⟨β, u(I_even)⟩`. Negative `n`, or `n` above
/// both degrees, gives zero.
pub fn cup_n(n: i64, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    if alpha.model != beta.model {
        return Err(Error::ModelMismatch(
            "cup product of cochains on different models".into(),
        ));
    }
    let (i, j) = (alpha.dim as i64, beta.dim as i64);
    let dim = i + j - n;
    if n < 0 || dim < 0 || alpha.is_zero() || beta.is_zero() {
        return Ok(Cochain::zero(alpha.model.clone(), dim.max(0) as usize));
    }
    let dim = dim as usize;
    let n = n as usize;
    let model = &alpha.model;
    let diagrams: Vec<(Vec<usize>, Vec<usize>)> = enumerate_diagrams(n, dim)
        .into_iter()
        .map(|d| (d.odd_vertices(), d.even_vertices()))
        .filter(|(o, e)| o.len() == alpha.dim + 1 && e.len() == beta.dim + 1)
        .collect();
    Cochain::tabulate(model, dim, |u| {
        let mut v = false;
        for (o, e) in &diagrams {
            if alpha.eval(&model.restrict(u, o)) && beta.eval(&model.restrict(u, e)) {
                v = !v;
            }
        }
        v
    })
}

/// `Sq^k(α) = α ⌣_{i-k} α` for `α` of degree `-i`.
pub fn sq(k: i64, alpha: &Cochain) -> Result<Cochain> {
    cup_n(alpha.dim as i64 - k, alpha, alpha)
}

/// Coefficient of `t^{i+j-n}` in `t^i ⌣_n t^j` on `BΣ₂`: `C(i,n)·C(j,n) mod 2`.
pub fn bsigma2_cup_closed(i: usize, j: usize, n: usize) -> bool {
    let (i, j, n) = (i as i64, j as i64, n as i64);
    binom_mod2(i, n) && binom_mod2(j, n)
}

/// Closed form of `ÃW_Δ(T^b x̃_n ⊗ T^a x̃_k)` on `EΣ₂`:
/// `Σ_ε Σ_{i+j=k+n} c^ε S^b(T^a x̃_i ⊗ T^{a+ε} x̃_j)` with
/// `c⁰ = C(i+1,n+1)C(j,n)` and `c¹ = C(i,n+1)C(j,n)`.
pub fn esigma2_aw_tilde_closed(
    b: bool,
    n: usize,
    a: bool,
    k: usize,
) -> FormalSum<(Simplex, Simplex)> {
    let mut out = FormalSum::zero();
    let (n_, k_) = (n as i64, k as i64);
    for i in 0..=(k + n) {
        let j = (k_ + n_) - i as i64;
        let i_ = i as i64;
        let cj = binom_mod2(j, n_);
        for eps in [false, true] {
            let c = if eps {
                binom_mod2(i_, n_ + 1)
            } else {
                binom_mod2(i_ + 1, n_ + 1)
            };
            if c && cj {
                let x = e_sigma2_cell(i, a);
                let y = e_sigma2_cell(j as usize, a ^ eps);
                out.toggle(if b { (y, x) } else { (x, y) });
            }
        }
    }
    out
}

/// Constraints for counting ordered partitions of `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionConstraint {
    /// `M` nonnegative summands.
    NonNegative,
    /// `M` positive summands.
    Positive,
    /// `M` nonnegative even summands.
    NonNegativeEven,
    /// `M` positive even summands.
    PositiveEven,
    /// `M+1` positive summands, all but the first even.
    PositiveAllButFirstEven,
    /// `M+1` positive summands, all but the last even.
    PositiveAllButLastEven,
    /// `M+2` positive summands, all but the first and last even.
    PositiveAllButEndsEven,
}

impl PartitionConstraint {
    pub const ALL: [PartitionConstraint; 7] = [
        PartitionConstraint::NonNegative,
        PartitionConstraint::Positive,
        PartitionConstraint::NonNegativeEven,
        PartitionConstraint::PositiveEven,
        PartitionConstraint::PositiveAllButFirstEven,
        PartitionConstraint::PositiveAllButLastEven,
        PartitionConstraint::PositiveAllButEndsEven,
    ];

    pub fn parts(self, m: usize) -> usize {
        match self {
            PartitionConstraint::PositiveAllButFirstEven
            | PartitionConstraint::PositiveAllButLastEven => m + 1,
            PartitionConstraint::PositiveAllButEndsEven => m + 2,
            _ => m,
        }
    }

    fn admits(self, idx: usize, parts: usize, v: usize) -> bool {
        let even = v.is_multiple_of(2);
        match self {
            PartitionConstraint::NonNegative => true,
            PartitionConstraint::Positive => v > 0,
            PartitionConstraint::NonNegativeEven => even,
            PartitionConstraint::PositiveEven => v > 0 && even,
            PartitionConstraint::PositiveAllButFirstEven => v > 0 && (idx == 0 || even),
            PartitionConstraint::PositiveAllButLastEven => v > 0 && (idx + 1 == parts || even),
            PartitionConstraint::PositiveAllButEndsEven => {
                v > 0 && (idx == 0 || idx + 1 == parts || even)
            }
        }
    }
}

/// Counts ordered partitions by enumeration.
pub fn partition_count(total: usize, m: usize, c: PartitionConstraint) -> u128 {
    fn rec(left: usize, idx: usize, parts: usize, c: PartitionConstraint) -> u128 {
        if idx == parts {
            return (left == 0) as u128;
        }
        (0..=left)
            .filter(|&v| c.admits(idx, parts, v))
            .map(|v| rec(left - v, idx + 1, parts, c))
            .sum()
    }
    rec(total, 0, c.parts(m), c)
}

/// Parity of [`partition_count`] from the binomial closed forms.
pub fn partition_parity_closed(total: usize, m: usize, c: PartitionConstraint) -> bool {
    let (n, m) = (total as i64, m as i64);
    match c {
        PartitionConstraint::NonNegative => binom_mod2(n + m - 1, n),
        PartitionConstraint::Positive => binom_mod2(n - 1, m - 1),
        PartitionConstraint::NonNegativeEven => binom_mod2(n + 2 * m - 1, n),
        PartitionConstraint::PositiveEven => binom_mod2(n - 1, 2 * m - 1),
        PartitionConstraint::PositiveAllButFirstEven
        | PartitionConstraint::PositiveAllButLastEven => binom_mod2(n - 1, 2 * m),
        PartitionConstraint::PositiveAllButEndsEven => binom_mod2(n - 1, 2 * m + 1),
    }
}
