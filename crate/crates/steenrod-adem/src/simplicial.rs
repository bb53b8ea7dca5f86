//! Simplicial-set models, normalized chains and cochains over F2.
//!
//! Simplices of `Δ^N` and `EG` are vertex sequences; a simplex of `BG` is the
//! bar sequence `[h₁, ..., hₙ]` with `hᵢ = g_{i-1}⁻¹ gᵢ`. Products hold one
//! component simplex per factor, all of the same dimension.

use crate::error::{Error, Result};
use crate::f2::FormalSum;
use crate::perm::Group;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceModel {
    /// The standard simplex `Δ^N`.
    Standard {
        dim: usize,
    },
    /// The homogeneous bar construction `EG`, truncated for enumeration.
    EGroup {
        group: Group,
        truncation: usize,
    },
    /// The classifying space `BG`, truncated for enumeration.
    BGroup {
        group: Group,
        truncation: usize,
    },
    Product(Vec<SpaceModel>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simplex {
    Seq(Vec<u8>),
    Prod(Vec<Simplex>),
}

impl Simplex {
    pub fn seq(&self) -> &[u8] {
        match self {
            Simplex::Seq(v) => v,
            Simplex::Prod(_) => panic!("product simplex used as a sequence"),
        }
    }

    pub fn components(&self) -> &[Simplex] {
        match self {
            Simplex::Prod(c) => c,
            Simplex::Seq(_) => panic!("sequence used as a product simplex"),
        }
    }
}

/// The simplex `T^{twisted} x̃_n = (T^t, T^{t+1}, ...)` of `EΣ₂`.
pub fn e_sigma2_cell(n: usize, twisted: bool) -> Simplex {
    Simplex::Seq(
        (0..=n)
            .map(|k| ((k + twisted as usize) % 2) as u8)
            .collect(),
    )
}

/// The simplex `x_n = [T, ..., T]` of `BΣ₂`.
pub fn b_sigma2_cell(n: usize) -> Simplex {
    Simplex::Seq(vec![1; n])
}

impl SpaceModel {
    pub fn e_sigma2(truncation: usize) -> Self {
        SpaceModel::EGroup {
            group: Group::sigma2(),
            truncation,
        }
    }

    pub fn b_sigma2(truncation: usize) -> Self {
        SpaceModel::BGroup {
            group: Group::sigma2(),
            truncation,
        }
    }

    /// Largest dimension in which nondegenerate simplices are enumerated.
    pub fn max_dim(&self) -> usize {
        match self {
            SpaceModel::Standard { dim } => *dim,
            SpaceModel::EGroup { truncation, .. } | SpaceModel::BGroup { truncation, .. } => {
                *truncation
            }
            SpaceModel::Product(fs) => {
                let sum: usize = fs.iter().map(|f| f.max_dim()).sum();
                fs.iter()
                    .filter(|f| !matches!(f, SpaceModel::Standard { .. }))
                    .map(|f| f.max_dim())
                    .fold(sum, usize::min)
            }
        }
    }

    pub fn dim(&self, s: &Simplex) -> usize {
        match (self, s) {
            (SpaceModel::BGroup { .. }, Simplex::Seq(v)) => v.len(),
            (SpaceModel::Product(fs), Simplex::Prod(c)) => fs[0].dim(&c[0]),
            (_, Simplex::Seq(v)) => v.len().saturating_sub(1),
            (_, Simplex::Prod(c)) => c.first().map_or(0, |c0| self.dim(c0)),
        }
    }

    /// Checks that `s` is a well-formed (possibly degenerate) simplex.
    pub fn validate(&self, s: &Simplex) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidSimplex(format!("{s:?}: {m}")));
        match (self, s) {
            (SpaceModel::Standard { dim }, Simplex::Seq(v)) => {
                if v.is_empty() {
                    return bad("empty vertex list");
                }
                if v.iter().any(|&x| x as usize > *dim) {
                    return bad("vertex out of range");
                }
                if v.windows(2).any(|w| w[0] > w[1]) {
                    return bad("vertices must be nondecreasing");
                }
                Ok(())
            }
            (SpaceModel::EGroup { group, .. }, Simplex::Seq(v)) => {
                if v.is_empty() {
                    return bad("empty vertex list");
                }
                if v.iter().any(|&g| g as usize >= group.order()) {
                    return bad("unknown group element");
                }
                Ok(())
            }
            (SpaceModel::BGroup { group, .. }, Simplex::Seq(v)) => {
                if v.iter().any(|&g| g as usize >= group.order()) {
                    return bad("unknown group element");
                }
                Ok(())
            }
            (SpaceModel::Product(fs), Simplex::Prod(c)) => {
                if fs.len() != c.len() {
                    return bad("wrong number of components");
                }
                let d = fs[0].dim(&c[0]);
                for (f, x) in fs.iter().zip(c) {
                    f.validate(x)?;
                    if f.dim(x) != d {
                        return bad("components of different dimensions");
                    }
                }
                Ok(())
            }
            _ => bad("simplex kind does not match the model"),
        }
    }

    /// Bitmask of the positions `i` with `s = sᵢ dᵢ s`.
    fn degenerate_positions(&self, s: &Simplex) -> u64 {
        match (self, s) {
            (SpaceModel::BGroup { .. }, Simplex::Seq(v)) => v
                .iter()
                .enumerate()
                .filter(|(_, &h)| h == 0)
                .fold(0, |m, (i, _)| m | 1 << i),
            (SpaceModel::Product(fs), Simplex::Prod(c)) => fs
                .iter()
                .zip(c)
                .fold(u64::MAX, |m, (f, x)| m & f.degenerate_positions(x)),
            (_, Simplex::Seq(v)) => v
                .windows(2)
                .enumerate()
                .filter(|(_, w)| w[0] == w[1])
                .fold(0, |m, (i, _)| m | 1 << i),
            _ => 0,
        }
    }

    pub fn is_degenerate(&self, s: &Simplex) -> bool {
        let mask = self.degenerate_positions(s);
        let d = self.dim(s);
        d > 0 && mask & ((1u64 << d) - 1) != 0
    }

    /// The simplex `f*(s)` for a nondecreasing vertex map `f`, given as the list
    /// of old vertex indices `f(0), ..., f(m)`.
    pub fn restrict(&self, s: &Simplex, verts: &[usize]) -> Simplex {
        match (self, s) {
            (SpaceModel::BGroup { group, .. }, Simplex::Seq(h)) => {
                let mut out = Vec::with_capacity(verts.len().saturating_sub(1));
                for w in verts.windows(2) {
                    let mut g = 0u8;
                    for &x in &h[w[0]..w[1]] {
                        g = group.mul(g, x);
                    }
                    out.push(g);
                }
                Simplex::Seq(out)
            }
            (SpaceModel::Product(fs), Simplex::Prod(c)) => Simplex::Prod(
                fs.iter()
                    .zip(c)
                    .map(|(f, x)| f.restrict(x, verts))
                    .collect(),
            ),
            (_, Simplex::Seq(v)) => Simplex::Seq(verts.iter().map(|&i| v[i]).collect()),
            _ => panic!("simplex kind does not match the model"),
        }
    }

    /// The `i`-th face, possibly degenerate.
    pub fn face(&self, s: &Simplex, i: usize) -> Simplex {
        let n = self.dim(s);
        let verts: Vec<usize> = (0..=n).filter(|&k| k != i).collect();
        self.restrict(s, &verts)
    }

    /// Boundary of one simplex in the normalized chain complex.
    pub fn boundary_simplex(&self, s: &Simplex) -> FormalSum<Simplex> {
        let n = self.dim(s);
        if n == 0 {
            return FormalSum::zero();
        }
        (0..=n)
            .map(|i| self.face(s, i))
            .filter(|f| !self.is_degenerate(f))
            .collect()
    }

    /// All simplices of dimension `d`, degenerate ones included.
    pub fn all_simplices(&self, d: usize) -> Vec<Simplex> {
        match self {
            SpaceModel::Standard { dim } => nondecreasing(d + 1, *dim as u8)
                .into_iter()
                .map(Simplex::Seq)
                .collect(),
            SpaceModel::EGroup { group, .. } => words(d + 1, group.order() as u8)
                .into_iter()
                .map(Simplex::Seq)
                .collect(),
            SpaceModel::BGroup { group, .. } => words(d, group.order() as u8)
                .into_iter()
                .map(Simplex::Seq)
                .collect(),
            SpaceModel::Product(fs) => {
                let mut acc: Vec<Vec<Simplex>> = vec![vec![]];
                for f in fs {
                    let comps = f.all_simplices(d);
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            comps.iter().map(move |c| {
                                let mut p = prefix.clone();
                                p.push(c.clone());
                                p
                            })
                        })
                        .collect();
                }
                acc.into_iter().map(Simplex::Prod).collect()
            }
        }
    }

    /// Nondegenerate simplices of dimension `d`, in increasing order.
    pub fn simplices(&self, d: usize) -> Vec<Simplex> {
        match self {
            SpaceModel::Standard { dim } => {
                if d > *dim {
                    return vec![];
                }
                combinations(*dim + 1, d + 1)
                    .into_iter()
                    .map(|c| Simplex::Seq(c.into_iter().map(|x| x as u8).collect()))
                    .collect()
            }
            SpaceModel::EGroup { group, .. } => {
                let n = group.order() as u8;
                words(d + 1, n)
                    .into_iter()
                    .filter(|w| w.windows(2).all(|p| p[0] != p[1]))
                    .map(Simplex::Seq)
                    .collect()
            }
            SpaceModel::BGroup { group, .. } => {
                let n = group.order() as u8;
                words(d, n - 1)
                    .into_iter()
                    .map(|w| Simplex::Seq(w.into_iter().map(|g| g + 1).collect()))
                    .collect()
            }
            SpaceModel::Product(_) => {
                let mut v: Vec<Simplex> = self
                    .all_simplices(d)
                    .into_iter()
                    .filter(|s| !self.is_degenerate(s))
                    .collect();
                v.sort();
                v
            }
        }
    }

    fn check_truncation(&self, needed: usize) -> Result<()> {
        match self {
            SpaceModel::Standard { .. } => Ok(()),
            _ if needed > self.max_dim() => Err(Error::TruncationExceeded {
                needed,
                truncation: self.max_dim(),
            }),
            _ => Ok(()),
        }
    }
}

fn words(len: usize, alphabet: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn nondecreasing(len: usize, max: u8) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                let lo = w.last().copied().unwrap_or(0);
                (lo..=max).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// Strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A normalized chain: a formal sum of nondegenerate simplices of one model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub model: SpaceModel,
    pub terms: FormalSum<Simplex>,
}

impl Chain {
    pub fn zero(model: SpaceModel) -> Self {
        Self {
            model,
            terms: FormalSum::zero(),
        }
    }

    /// Builds a chain, discarding degenerate simplices.
    pub fn new(model: SpaceModel, simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let terms = simplices
            .into_iter()
            .filter(|s| !model.is_degenerate(s))
            .collect();
        Self { model, terms }
    }

    pub fn single(model: SpaceModel, s: Simplex) -> Self {
        Self::new(model, [s])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(
                "adding chains on different models".into(),
            ));
        }
        Ok(Chain {
            model: self.model.clone(),
            terms: &self.terms + &other.terms,
        })
    }

    pub fn boundary(&self) -> Chain {
        Chain {
            model: self.model.clone(),
            terms: self.terms.map_linear(|s| self.model.boundary_simplex(s)),
        }
    }

    /// Sum of the coefficients of the vertices.
    pub fn augmentation(&self) -> bool {
        self.terms.iter().filter(|s| self.model.dim(s) == 0).count() % 2 == 1
    }
}

/// A homogeneous cochain of cohomological degree `-dim`, given by its support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub model: SpaceModel,
    pub dim: usize,
    pub support: BTreeSet<Simplex>,
}

impl Cochain {
    pub fn zero(model: SpaceModel, dim: usize) -> Self {
        Self {
            model,
            dim,
            support: BTreeSet::new(),
        }
    }

    pub fn new(
        model: SpaceModel,
        dim: usize,
        support: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in support {
            model.validate(&s)?;
            if model.dim(&s) != dim {
                return Err(Error::DegreeMismatch(format!(
                    "{s:?} is not of dimension {dim}"
                )));
            }
            if !model.is_degenerate(&s) && !set.insert(s.clone()) {
                set.remove(&s);
            }
        }
        Ok(Self {
            model,
            dim,
            support: set,
        })
    }

    /// Builds a cochain from `(simplex, value)` pairs.
    pub fn from_values(
        model: SpaceModel,
        dim: usize,
        values: impl IntoIterator<Item = (Simplex, bool)>,
    ) -> Self {
        let support = values
            .into_iter()
            .filter(|(_, v)| *v)
            .map(|(s, _)| s)
            .collect();
        Self {
            model,
            dim,
            support,
        }
    }

    /// Cohomological degree, which is nonpositive.
    pub fn degree(&self) -> i64 {
        -(self.dim as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Value on a simplex; degenerate simplices and other dimensions give 0.
    pub fn eval(&self, s: &Simplex) -> bool {
        self.support.contains(s)
    }

    pub fn pair(&self, c: &Chain) -> Result<bool> {
        if c.model != self.model {
            return Err(Error::ModelMismatch(
                "pairing a cochain with a chain on another model".into(),
            ));
        }
        Ok(c.terms.iter().filter(|s| self.eval(s)).count() % 2 == 1)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(
                "adding cochains on different models".into(),
            ));
        }
        if self.dim != other.dim {
            return Err(Error::DegreeMismatch(format!(
                "adding cochains of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Cochain {
            model: self.model.clone(),
            dim: self.dim,
            support: self
                .support
                .symmetric_difference(&other.support)
                .cloned()
                .collect(),
        })
    }

    /// `(dα)(s) = α(∂s)`.
    pub fn coboundary(&self) -> Result<Cochain> {
        self.model.check_truncation(self.dim + 1)?;
        let values = self.model.simplices(self.dim + 1).into_iter().map(|s| {
            let v = self
                .model
                .boundary_simplex(&s)
                .iter()
                .filter(|f| self.eval(f))
                .count()
                % 2
                == 1;
            (s, v)
        });
        Ok(Cochain::from_values(
            self.model.clone(),
            self.dim + 1,
            values,
        ))
    }

    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.coboundary()?.is_zero())
    }

    /// Assembles a cochain from a value function on the simplices of `dim`.
    pub fn tabulate(
        model: &SpaceModel,
        dim: usize,
        f: impl Fn(&Simplex) -> bool + Sync,
    ) -> Result<Cochain> {
        use rayon::prelude::*;
        model.check_truncation(dim)?;
        let simplices = model.simplices(dim);
        let values: Vec<bool> = simplices.par_iter().map(&f).collect();
        Ok(Cochain::from_values(
            model.clone(),
            dim,
            simplices.into_iter().zip(values),
        ))
    }
}

/// The projection `EG → BG`, `(g₀, ..., gₙ) ↦ [g₀⁻¹g₁, ..., g_{n-1}⁻¹gₙ]`;
/// `None` when the image is degenerate.
pub fn project_eg_to_bg(group: &Group, s: &Simplex) -> Option<Simplex> {
    let v = s.seq();
    let h: Vec<u8> = v
        .windows(2)
        .map(|w| group.mul(group.inv(w[0]), w[1]))
        .collect();
    if h.contains(&0) {
        None
    } else {
        Some(Simplex::Seq(h))
    }
}

/// Applies [`project_eg_to_bg`] to a chain on `EG`.
pub fn project_chain(c: &Chain) -> Result<Chain> {
    match &c.model {
        SpaceModel::EGroup { group, truncation } => Ok(Chain {
            model: SpaceModel::BGroup {
                group: group.clone(),
                truncation: *truncation,
            },
            terms: c
                .terms
                .iter()
                .filter_map(|s| project_eg_to_bg(group, s))
                .collect(),
        }),
        _ => Err(Error::ModelMismatch(
            "projection needs a chain on EG".into(),
        )),
    }
}

/// Deletes the vertices `start..=end` of a simplex of `EΣ₂` or `BΣ₂`;
/// `None` when the result is degenerate.
pub fn face_interval_delete(
    model: &SpaceModel,
    s: &Simplex,
    start: usize,
    end: usize,
) -> Result<Option<Simplex>> {
    if !matches!(model, SpaceModel::EGroup { .. } | SpaceModel::BGroup { .. }) {
        return Err(Error::ModelMismatch(
            "interval deletion is defined on EG and BG".into(),
        ));
    }
    let n = model.dim(s);
    if start > end || end > n {
        return Err(Error::InvalidArgument(format!(
            "interval {start}..={end} outside 0..={n}"
        )));
    }
    let verts: Vec<usize> = (0..=n).filter(|&k| k < start || k > end).collect();
    if verts.is_empty() {
        return Ok(None);
    }
    let f = model.restrict(s, &verts);
    Ok(if model.is_degenerate(&f) {
        None
    } else {
        Some(f)
    })
}
