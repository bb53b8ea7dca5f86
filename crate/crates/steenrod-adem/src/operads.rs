//! The surjection operad acting on cochains, the Barratt–Eccles operad, and
//! the table reduction morphism between them.

use crate::chain_maps::staircases;
use crate::error::{Error, Result};
use crate::f2::FormalSum;
use crate::perm::{block_compose, Group, Permutation};
use crate::simplicial::{Cochain, Simplex, SpaceModel};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A basis element of `S_r(d)`: a surjection `{1..r+d} → {1..r}` with no two
/// adjacent values equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surjection {
    values: Vec<u8>,
    arity: usize,
}

impl Surjection {
    /// `Ok(None)` when the sequence is the zero element (not surjective, or
    /// with a repeated adjacent value).
    pub fn new(values: Vec<u8>, arity: usize) -> Result<Option<Self>> {
        if values.iter().any(|&v| v == 0 || v as usize > arity) {
            return Err(Error::InvalidArgument(format!(
                "{values:?} has values outside 1..={arity}"
            )));
        }
        let mut seen = vec![false; arity + 1];
        for &v in &values {
            seen[v as usize] = true;
        }
        if seen[1..].iter().any(|s| !s) || values.windows(2).any(|w| w[0] == w[1]) {
            return Ok(None);
        }
        Ok(Some(Self { values, arity }))
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.values.len() - self.arity
    }

    /// `ρ·s = ρ∘s`.
    pub fn relabel(&self, rho: &Permutation) -> Surjection {
        Surjection {
            values: self
                .values
                .iter()
                .map(|&v| rho.apply(v as usize) as u8)
                .collect(),
            arity: self.arity,
        }
    }

    /// The element `(1 2 1 2 ...)` with `n+2` entries, which acts as `⌣_n`.
    pub fn cup(n: usize) -> Surjection {
        Surjection {
            values: (0..n + 2).map(|i| (i % 2) as u8 + 1).collect(),
            arity: 2,
        }
    }
}

/// `∂s = Σᵢ (s with entry i deleted)`, dropping zero elements.
pub fn surj_boundary(s: &Surjection) -> FormalSum<Surjection> {
    let mut out = FormalSum::zero();
    for i in 0..s.values.len() {
        let mut v = s.values.clone();
        v.remove(i);
        if let Ok(Some(t)) = Surjection::new(v, s.arity) {
            out.toggle(t);
        }
    }
    out
}

pub fn surj_boundary_sum(c: &FormalSum<Surjection>) -> FormalSum<Surjection> {
    c.map_linear(surj_boundary)
}

struct StepSearch<'a> {
    s: &'a [u8],
    budget: Vec<usize>,
    last_end: Vec<Option<usize>>,
    last_idx: Vec<usize>,
    verts: Vec<Vec<usize>>,
    top: usize,
}

impl<'a> StepSearch<'a> {
    fn new(s: &'a Surjection, dims: &[usize], top: usize) -> Self {
        let r = s.arity;
        let mut last_idx = vec![0; r];
        for (j, &v) in s.values.iter().enumerate() {
            last_idx[v as usize - 1] = j;
        }
        Self {
            s: &s.values,
            budget: dims.iter().map(|d| d + 1).collect(),
            last_end: vec![None; r],
            last_idx,
            verts: vec![Vec::new(); r],
            top,
        }
    }

    /// Visits every step diagram; `check(level, vertices)` runs when a level
    /// is complete and may prune, and `done` runs on each full diagram.
    fn run<C, D>(&mut self, j: usize, start: usize, check: &mut C, done: &mut D)
    where
        C: FnMut(usize, &[usize]) -> bool,
        D: FnMut(&[Vec<usize>]),
    {
        if j == self.s.len() {
            done(&self.verts);
            return;
        }
        let lvl = self.s[j] as usize - 1;
        if let Some(le) = self.last_end[lvl] {
            if start <= le {
                return;
            }
        }
        let last = j + 1 == self.s.len();
        let max_len = self.budget[lvl];
        if max_len == 0 {
            return;
        }
        let hi = (start + max_len - 1).min(self.top);
        let lo = if last { self.top } else { start };
        if lo > hi {
            return;
        }
        for end in lo..=hi {
            let len = end - start + 1;
            let closes = self.last_idx[lvl] == j;
            if closes && len != self.budget[lvl] {
                continue;
            }
            self.budget[lvl] -= len;
            let prev_end = self.last_end[lvl].replace(end);
            let mark = self.verts[lvl].len();
            self.verts[lvl].extend(start..=end);
            if !closes || check(lvl, &self.verts[lvl]) {
                self.run(j + 1, end, check, done);
            }
            self.verts[lvl].truncate(mark);
            self.last_end[lvl] = prev_end;
            self.budget[lvl] += len;
        }
    }
}

/// Value of `s(α₁ ⊗ ... ⊗ α_r)` on `u`: the sum over step diagrams of
/// `Π_ℓ ⟨α_ℓ, u(I(ℓ))⟩`. Mismatched degrees give 0.
pub fn surj_action(s: &Surjection, alphas: &[&Cochain], u: &Simplex) -> Result<bool> {
    if alphas.len() != s.arity {
        return Err(Error::InvalidArgument(format!(
            "{} inputs for arity {}",
            alphas.len(),
            s.arity
        )));
    }
    let model = &alphas[0].model;
    if alphas.iter().any(|a| a.model != *model) {
        return Err(Error::ModelMismatch(
            "surjection inputs live on different models".into(),
        ));
    }
    let dims: Vec<usize> = alphas.iter().map(|a| a.dim).collect();
    let top = model.dim(u);
    if dims.iter().sum::<usize>() != top + s.degree() {
        log::debug!(
            "surj_action: degrees {dims:?} do not match a {top}-simplex for {:?}",
            s.values
        );
        return Ok(false);
    }
    let mut value = false;
    let mut search = StepSearch::new(s, &dims, top);
    search.run(
        0,
        0,
        &mut |lvl, verts| alphas[lvl].eval(&model.restrict(u, verts)),
        &mut |_| value = !value,
    );
    Ok(value)
}

/// The cochain `s(α₁ ⊗ ... ⊗ α_r)`.
pub fn surj_action_cochain(s: &Surjection, alphas: &[&Cochain]) -> Result<Cochain> {
    let total: usize = alphas.iter().map(|a| a.dim).sum();
    if total < s.degree() {
        return Ok(Cochain::zero(alphas[0].model.clone(), 0));
    }
    let dim = total - s.degree();
    Cochain::tabulate(&alphas[0].model, dim, |u| {
        surj_action(s, alphas, u).unwrap_or(false)
    })
}

/// Evaluates a sum of surjections on `α^{⊗r}`.
pub fn surj_sum_on_power(
    sum: &FormalSum<Surjection>,
    alpha: &Cochain,
    r: usize,
) -> Result<Cochain> {
    let inputs: Vec<&Cochain> = vec![alpha; r];
    let degree = match sum.iter().next() {
        Some(s) => s.degree(),
        None => return Ok(Cochain::zero(alpha.model.clone(), alpha.dim * r)),
    };
    if sum.iter().any(|s| s.degree() != degree || s.arity != r) {
        return Err(Error::DegreeMismatch(
            "surjections of mixed degree or arity".into(),
        ));
    }
    let dim = alpha.dim * r - degree;
    let terms: Vec<&Surjection> = sum.iter().collect();
    Cochain::tabulate(&alpha.model, dim, |u| {
        terms
            .iter()
            .filter(|s| surj_action(s, &inputs, u).unwrap_or(false))
            .count()
            % 2
            == 1
    })
}

/// Counts of the step diagrams of `s` on a `top`-simplex with all inputs of
/// dimension `dim`: the total number, and the number of distinct tuples of
/// level faces that occur an odd number of times.
pub fn step_diagram_profile(s: &Surjection, dim: usize, top: usize) -> (usize, usize) {
    let dims = vec![dim; s.arity];
    let mut total = 0usize;
    let mut faces: HashMap<Vec<Vec<usize>>, bool> = HashMap::new();
    let mut search = StepSearch::new(s, &dims, top);
    search.run(0, 0, &mut |_, _| true, &mut |verts| {
        total += 1;
        let mut key: Vec<Vec<usize>> = verts.to_vec();
        for k in &mut key {
            k.sort_unstable();
        }
        *faces.entry(key).or_insert(false) ^= true;
    });
    (total, faces.values().filter(|&&odd| odd).count())
}

/// Table reduction `TR: N(EΣ_r) → S_r` on one simplex `(σ₀, ..., σₙ)`.
///
/// For each `(a₀, ..., aₙ)` with `aᵢ ≥ 1` and `Σaᵢ = n + r`, row `i` contributes
/// its first `aᵢ` entries not yet removed; all but the last of them are then
/// removed from the rows below. The last row contributes everything left.
pub fn table_reduction(group: &Group, s: &Simplex) -> Result<FormalSum<Surjection>> {
    let rows: Vec<&Permutation> = s
        .seq()
        .iter()
        .map(|&g| {
            group
                .perm(g)
                .ok_or_else(|| Error::Unsupported("TR needs a symmetric group".into()))
        })
        .collect::<Result<_>>()?;
    let r = rows[0].degree();
    let mut out = FormalSum::zero();
    let mut removed = vec![false; r + 1];
    let mut seq = Vec::with_capacity(rows.len() + r);
    fn rec(
        i: usize,
        rows: &[&Permutation],
        removed: &mut Vec<bool>,
        seq: &mut Vec<u8>,
        out: &mut FormalSum<Surjection>,
        r: usize,
    ) {
        let avail: Vec<u8> = rows[i]
            .as_slice()
            .iter()
            .copied()
            .filter(|&v| !removed[v as usize])
            .collect();
        let last = i + 1 == rows.len();
        let mark = seq.len();
        if last {
            if avail.is_empty() || seq.last() == avail.first() {
                return;
            }
            seq.extend_from_slice(&avail);
            if seq.windows(2).all(|w| w[0] != w[1]) {
                out.toggle(Surjection {
                    values: seq.clone(),
                    arity: r,
                });
            }
            seq.truncate(mark);
            return;
        }
        for a in 1..=avail.len() {
            let take = &avail[..a];
            if seq.last() == take.first() {
                continue;
            }
            seq.extend_from_slice(take);
            for &v in &take[..a - 1] {
                removed[v as usize] = true;
            }
            rec(i + 1, rows, removed, seq, out, r);
            for &v in &take[..a - 1] {
                removed[v as usize] = false;
            }
            seq.truncate(mark);
        }
    }
    rec(0, &rows, &mut removed, &mut seq, &mut out, r);
    Ok(out)
}

pub fn table_reduction_sum(group: &Group, c: &FormalSum<Simplex>) -> Result<FormalSum<Surjection>> {
    let mut out = FormalSum::zero();
    for s in c {
        out.add_sum(table_reduction(group, s)?);
    }
    Ok(out)
}

/// Barratt–Eccles composition `outer(inner₁, ..., inner_r)`: the shuffle map
/// into the product followed by vertexwise block composition.
pub fn be_compose(
    outer: (&Group, &Simplex),
    inners: &[(&Group, &Simplex)],
) -> Result<FormalSum<Simplex>> {
    let arity = outer.0.perm(0).map(|p| p.degree()).unwrap_or(0);
    if arity != inners.len() {
        return Err(Error::DegreeMismatch(format!(
            "outer arity {arity} with {} inner elements",
            inners.len()
        )));
    }
    let sizes: usize = inners
        .iter()
        .map(|(g, _)| g.perm(0).map_or(0, |p| p.degree()))
        .sum();
    let target = Group::symmetric(sizes)?;
    let mut dims = vec![seq_dim(outer.1)];
    dims.extend(inners.iter().map(|(_, s)| seq_dim(s)));
    let mut out = FormalSum::zero();
    for path in staircases(&dims) {
        let len = path[0].len();
        let mut verts = Vec::with_capacity(len);
        for t in 0..len {
            let sigma = outer.0.perm(outer.1.seq()[path[0][t]]).expect("symmetric");
            let taus: Vec<Permutation> = inners
                .iter()
                .enumerate()
                .map(|(i, (g, s))| g.perm(s.seq()[path[i + 1][t]]).expect("symmetric").clone())
                .collect();
            verts.push(target.perm_index(&block_compose(sigma, &taus)?)?);
        }
        if verts.windows(2).all(|w| w[0] != w[1]) {
            out.toggle(Simplex::Seq(verts));
        }
    }
    Ok(out)
}

fn seq_dim(s: &Simplex) -> usize {
    s.seq().len() - 1
}

/// The model `EΣ_r` used for Barratt–Eccles chains.
pub fn e_sym(r: usize) -> Result<SpaceModel> {
    Ok(SpaceModel::EGroup {
        group: Group::symmetric(r)?,
        truncation: usize::MAX,
    })
}
