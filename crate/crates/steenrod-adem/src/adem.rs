//! The maps `Φ`, `Ψ` and `J_Ψ`, the homotopy `J_(23)`, the class `R̃(q,p)`,
//! and certificates `dx(α) = (Adem relation)(α)` built from them.

use crate::binom::{binom_mod2, binomial};
use crate::chain_maps::{aw_diag, homotopy_join, j_g, staircases, ChainMap};
use crate::error::{Error, Result};
use crate::f2::FormalSum;
use crate::operads::{
    be_compose, step_diagram_profile, surj_sum_on_power, table_reduction, table_reduction_sum,
    Surjection,
};
use crate::perm::{d8_in_sigma4, transposition_23, v4_to_triple, Group};
use crate::simplicial::{
    b_sigma2_cell, e_sigma2_cell, project_eg_to_bg, Chain, Cochain, Simplex, SpaceModel,
};
use crate::steenrod::{aw_tilde_delta, cup_n, sq};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// `EV4 = E(Σ₂×Σ₂)`, identified with `EΣ₂×EΣ₂`.
pub fn e_v4() -> SpaceModel {
    SpaceModel::EGroup {
        group: Group::v4(),
        truncation: usize::MAX,
    }
}

/// `ED8`, identified with `EΣ₂×EΣ₂×EΣ₂` through [`crate::perm::TripleCode`].
pub fn e_d8() -> SpaceModel {
    SpaceModel::EGroup {
        group: Group::d8(),
        truncation: usize::MAX,
    }
}

pub fn e_sigma4() -> SpaceModel {
    SpaceModel::EGroup {
        group: Group::sigma4(),
        truncation: usize::MAX,
    }
}

/// `(n, twisted)` of a nondegenerate simplex of `EΣ₂`.
fn cell(s: &Simplex) -> (usize, bool) {
    let v = s.seq();
    (v.len() - 1, v[0] == 1)
}

/// `Φ = (Id ⊗ ÃW_Δ) ∘ (AW_Δ ⊗ Id)` on `x ⊗ y` for cells of `EΣ₂`.
pub fn phi(x: &Simplex, y: &Simplex) -> FormalSum<(Simplex, Simplex, Simplex)> {
    let e = SpaceModel::e_sigma2(usize::MAX);
    let mut out = FormalSum::zero();
    for (x1, x2) in &aw_diag(&e, x) {
        let (n, twisted) = cell(x2);
        for (y1, y2) in &aw_tilde_delta(n, twisted, &e, y) {
            out.toggle((x1.clone(), y1.clone(), y2.clone()));
        }
    }
    out
}

/// A basis element `T^a x̃_r ⊗ x_s ⊗ x_t` of `N(EΣ₂)⊗N(BΣ₂)⊗N(BΣ₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhiBarTerm {
    pub twisted: bool,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl PhiBarTerm {
    pub fn new(twisted: bool, r: usize, s: usize, t: usize) -> Self {
        Self { twisted, r, s, t }
    }

    /// Canonical name in the coinvariants, where `[T x̃ ⊗ y ⊗ z] = [x̃ ⊗ z ⊗ y]`:
    /// `s ≤ t`, and untwisted when `s = t`.
    pub fn coinvariant(self) -> Self {
        match self.s.cmp(&self.t) {
            std::cmp::Ordering::Less => self,
            std::cmp::Ordering::Equal => Self {
                twisted: false,
                ..self
            },
            std::cmp::Ordering::Greater => Self {
                twisted: !self.twisted,
                r: self.r,
                s: self.t,
                t: self.s,
            },
        }
    }
}

/// `Φ̄(x̃_q ⊗ x_p)`: the image of `Φ(x̃_q ⊗ x̃_p)` with the last two factors
/// projected to `BΣ₂`.
pub fn phi_bar(q: usize, p: usize) -> FormalSum<PhiBarTerm> {
    phi(&e_sigma2_cell(q, false), &e_sigma2_cell(p, false))
        .iter()
        .map(|(x, y, z)| {
            let (r, tw) = cell(x);
            PhiBarTerm::new(tw, r, cell(y).0, cell(z).0)
        })
        .collect()
}

/// Closed form of `Φ̄(x̃_q ⊗ x_p)`, split into symmetric and nonsymmetric
/// parts `(S_{q,p}, NS_{q,p})`.
pub fn phi_bar_closed(q: usize, p: usize) -> (FormalSum<PhiBarTerm>, FormalSum<PhiBarTerm>) {
    let (mut sym, mut nonsym) = (FormalSum::zero(), FormalSum::zero());
    let (qi, pi) = (q as i64, p as i64);
    // Work with L = 2ℓ and A = 2a.
    for l in (pi - qi).max(0)..=pi {
        for a in (-l..=l).filter(|a| (a - l) % 2 == 0) {
            let s = pi - (l + a) / 2;
            let t = pi - (l - a) / 2;
            if !(binom_mod2(s, pi - l) && binom_mod2(t, pi - l)) {
                continue;
            }
            let term = PhiBarTerm::new(false, (qi - pi + l) as usize, s as usize, t as usize);
            if a == 0 {
                sym.toggle(term);
            } else {
                nonsym.toggle(term);
            }
        }
    }
    (sym, nonsym)
}

/// `Φ̄(x_q ⊗ x_p)` in the coinvariant complex.
pub fn phi_bar_coinvariant(q: usize, p: usize) -> FormalSum<PhiBarTerm> {
    phi_bar(q, p).iter().map(|t| t.coinvariant()).collect()
}

/// Closed forms `(Ŝ_{q,p}, N̂S_{q,p})` with `Φ̄(x_q ⊗ x_p) = Ŝ + ∂N̂S`.
pub fn phi_bar_coinvariant_closed(
    q: usize,
    p: usize,
) -> (FormalSum<PhiBarTerm>, FormalSum<PhiBarTerm>) {
    let (mut sym, mut ns) = (FormalSum::zero(), FormalSum::zero());
    let (qi, pi) = (q as i64, p as i64);
    for l in (pi - qi).max(0)..=pi {
        for a in (0..=l).filter(|a| (a - l) % 2 == 0) {
            let s = pi - (l + a) / 2;
            let t = pi - (l - a) / 2;
            if !(binom_mod2(s, pi - l) && binom_mod2(t, pi - l)) {
                continue;
            }
            if a == 0 {
                sym.toggle(PhiBarTerm::new(
                    false,
                    (qi - pi + l) as usize,
                    s as usize,
                    t as usize,
                ));
            } else {
                ns.toggle(PhiBarTerm::new(
                    false,
                    (qi - pi + l + 1) as usize,
                    s as usize,
                    t as usize,
                ));
            }
        }
    }
    (sym, ns)
}

/// Boundary in the coinvariant complex: `∂[x̃_{r} ⊗ x_s ⊗ x_t] =
/// [x̃_{r-1} ⊗ x_s ⊗ x_t] + [T x̃_{r-1} ⊗ x_s ⊗ x_t]` on canonical names.
pub fn coinvariant_boundary(c: &FormalSum<PhiBarTerm>) -> FormalSum<PhiBarTerm> {
    c.map_linear(|t| {
        if t.r == 0 {
            return FormalSum::zero();
        }
        [
            PhiBarTerm::new(false, t.r - 1, t.s, t.t).coinvariant(),
            PhiBarTerm::new(true, t.r - 1, t.s, t.t).coinvariant(),
        ]
        .into_iter()
        .collect()
    })
}

/// `x̃_q × x̃_p = EZ(x̃_q ⊗ x̃_p)` in `EV4`.
pub fn x_tilde_product(q: usize, p: usize) -> FormalSum<Simplex> {
    let (x, y) = (e_sigma2_cell(q, false), e_sigma2_cell(p, false));
    staircases(&[q, p])
        .into_iter()
        .map(|path| {
            Simplex::Seq(
                path[0]
                    .iter()
                    .zip(&path[1])
                    .map(|(&i, &j)| x.seq()[i] | x_shift(y.seq()[j]))
                    .collect(),
            )
        })
        .collect()
}

fn x_shift(e: u8) -> u8 {
    e << 1
}

/// `EZ` of a tensor of three cells of `EΣ₂`, as a chain on `ED8`.
pub fn ez_triple(x: &Simplex, y: &Simplex, z: &Simplex) -> FormalSum<Simplex> {
    let dims = [cell(x).0, cell(y).0, cell(z).0];
    staircases(&dims)
        .into_iter()
        .map(|path| {
            Simplex::Seq(
                (0..path[0].len())
                    .map(|k| {
                        x.seq()[path[0][k]] | y.seq()[path[1][k]] << 1 | z.seq()[path[2][k]] << 2
                    })
                    .collect(),
            )
        })
        .collect()
}

/// `EZ(Φ(x̃_q ⊗ x̃_p))` in `ED8`.
pub fn ez_phi(q: usize, p: usize) -> FormalSum<Simplex> {
    phi(&e_sigma2_cell(q, false), &e_sigma2_cell(p, false))
        .map_linear(|(x, y, z)| ez_triple(x, y, z))
}

/// The inclusion `ι: EV4 → ED8` on one simplex.
pub fn iota(s: &Simplex) -> Simplex {
    Simplex::Seq(
        s.seq()
            .iter()
            .map(|&g| v4_to_triple(g & 1 == 1, g & 2 == 2).index())
            .collect(),
    )
}

/// `Ψ = EZ ∘ Φ ∘ AW : N(EV4) → N(ED8)` on one simplex.
pub fn psi(s: &Simplex) -> FormalSum<Simplex> {
    let v = s.seq();
    let n = v.len() - 1;
    let mut out = FormalSum::zero();
    for i in 0..=n {
        let front: Vec<u8> = v[..=i].iter().map(|g| g & 1).collect();
        let back: Vec<u8> = v[i..].iter().map(|g| g >> 1).collect();
        if front.windows(2).any(|w| w[0] == w[1]) || back.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        out.add_sum(
            phi(&Simplex::Seq(front), &Simplex::Seq(back))
                .map_linear(|(x, y, z)| ez_triple(x, y, z)),
        );
    }
    out
}

fn iota_map() -> ChainMap<'static> {
    ChainMap::new(e_v4(), e_d8(), |s| {
        let t = iota(s);
        if e_d8().is_degenerate(&t) {
            FormalSum::zero()
        } else {
            FormalSum::single(t)
        }
    })
}

fn psi_map() -> ChainMap<'static> {
    ChainMap::new(e_v4(), e_d8(), psi)
}

/// `J_Ψ(g₀, ..., gₙ) = Σ_j ι(g₀, ..., g_j) * Ψ(g_j, ..., gₙ)`.
pub fn j_psi(s: &Simplex) -> FormalSum<Simplex> {
    homotopy_join(&iota_map(), &psi_map(), s).expect("both maps land in ED8")
}

pub fn j_psi_sum(c: &FormalSum<Simplex>) -> FormalSum<Simplex> {
    c.map_linear(j_psi)
}

/// Vertexwise image of a chain on `ED8` in `EΣ4`.
pub fn d8_to_sigma4(c: &FormalSum<Simplex>) -> FormalSum<Simplex> {
    let img = d8_in_sigma4();
    c.iter()
        .map(|s| Simplex::Seq(s.seq().iter().map(|&g| img[g as usize]).collect()))
        .collect()
}

/// `J_(23)(ι(x̃_q × x̃_p))` in `EΣ4`.
pub fn j_23_product(q: usize, p: usize) -> FormalSum<Simplex> {
    let s4 = Group::sigma4();
    let g = s4.perm_index(&transposition_23()).expect("Σ4");
    let base = d8_to_sigma4(&x_tilde_product(q, p).iter().map(iota).collect());
    base.map_linear(|s| j_g(&s4, g, s))
}

/// Projection `N(EG) → N(BG)` of a formal sum.
pub fn project(group: &Group, c: &FormalSum<Simplex>) -> FormalSum<Simplex> {
    c.iter()
        .filter_map(|s| project_eg_to_bg(group, s))
        .collect()
}

pub fn boundary(model: &SpaceModel, c: &FormalSum<Simplex>) -> FormalSum<Simplex> {
    Chain {
        model: model.clone(),
        terms: c.clone(),
    }
    .boundary()
    .terms
}

/// The five summands of `R̃(q,p)` in `EΣ4`, and their sum.
#[derive(Clone, Debug)]
pub struct RTilde {
    pub d_j_psi_qp: FormalSum<Simplex>,
    pub d_j_psi_pq: FormalSum<Simplex>,
    pub d_j_23: FormalSum<Simplex>,
    pub ez_phi_qp: FormalSum<Simplex>,
    pub ez_phi_pq: FormalSum<Simplex>,
}

impl RTilde {
    pub fn sum(&self) -> FormalSum<Simplex> {
        let mut s = self.d_j_psi_qp.clone();
        for t in [
            &self.d_j_psi_pq,
            &self.d_j_23,
            &self.ez_phi_qp,
            &self.ez_phi_pq,
        ] {
            s = &s + t;
        }
        s
    }

    pub fn parts(&self) -> [&FormalSum<Simplex>; 5] {
        [
            &self.d_j_psi_qp,
            &self.d_j_psi_pq,
            &self.d_j_23,
            &self.ez_phi_qp,
            &self.ez_phi_pq,
        ]
    }

    /// Image in `N(BΣ4)`; zero for every `(q, p)`.
    pub fn projection(&self) -> FormalSum<Simplex> {
        project(&Group::sigma4(), &self.sum())
    }
}

pub fn r_tilde(q: usize, p: usize) -> RTilde {
    let e4 = e_sigma4();
    let jq = d8_to_sigma4(&j_psi_sum(&x_tilde_product(q, p)));
    let jp = d8_to_sigma4(&j_psi_sum(&x_tilde_product(p, q)));
    RTilde {
        d_j_psi_qp: boundary(&e4, &jq),
        d_j_psi_pq: boundary(&e4, &jp),
        d_j_23: boundary(&e4, &j_23_product(q, p)),
        ez_phi_qp: d8_to_sigma4(&ez_phi(q, p)),
        ez_phi_pq: d8_to_sigma4(&ez_phi(p, q)),
    }
}

/// The chains `J_Ψ(x̃_q × x̃_p)`, `J_Ψ(x̃_p × x̃_q)` and `J_(23)(x̃_q × x̃_p)` in
/// `EΣ4`, and the table reduction of their sum.
#[derive(Clone, Debug)]
pub struct Witness {
    pub q: usize,
    pub p: usize,
    pub chains: [FormalSum<Simplex>; 3],
    pub surjections: FormalSum<Surjection>,
}

pub fn witness(q: usize, p: usize) -> Result<Witness> {
    let chains = [
        d8_to_sigma4(&j_psi_sum(&x_tilde_product(q, p))),
        d8_to_sigma4(&j_psi_sum(&x_tilde_product(p, q))),
        j_23_product(q, p),
    ];
    let s4 = Group::sigma4();
    let mut surjections = FormalSum::zero();
    for c in &chains {
        surjections.add_sum(table_reduction_sum(&s4, c)?);
    }
    Ok(Witness {
        q,
        p,
        chains,
        surjections,
    })
}

/// `coeff · Sq^{left}(α) ⌣_{cup} Sq^{right}(α)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NTerm {
    pub coeff: u128,
    pub sq_left: i64,
    pub cup: i64,
    pub sq_right: i64,
}

/// Terms of `N_{q,p,n}` with odd coefficient.
pub fn n_terms(q: usize, p: usize, n: usize) -> Vec<NTerm> {
    let (q, p, n) = (q as i64, p as i64, n as i64);
    let mut out = Vec::new();
    for l in (p - q).max(0)..=p {
        for a in (1..=l).filter(|a| (a - l) % 2 == 0) {
            let coeff = binomial(p - (l + a) / 2, p - l) * binomial(p - (l - a) / 2, p - l);
            if coeff % 2 == 1 {
                out.push(NTerm {
                    coeff,
                    sq_left: n - p + (l + a) / 2,
                    cup: q - p + l + 1,
                    sq_right: n - p + (l - a) / 2,
                });
            }
        }
    }
    out
}

/// `coeff · Sq^{outer} Sq^{inner}(α)`, from the half of the relation indexed
/// by `(q, p)` with summation index `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: u128,
    pub outer_sq: i64,
    pub inner_sq: i64,
    pub from: (usize, usize),
    pub ell: i64,
}

fn relation_half(q: usize, p: usize, n: usize) -> Vec<RelationTerm> {
    let (qi, pi, ni) = (q as i64, p as i64, n as i64);
    (0..=pi / 2)
        .filter(|l| qi - pi + 2 * l >= 0)
        .filter_map(|l| {
            let coeff = binomial(pi - l, pi - 2 * l);
            (coeff % 2 == 1).then_some(RelationTerm {
                coeff,
                outer_sq: 2 * ni - qi - l,
                inner_sq: ni - pi + l,
                from: (q, p),
                ell: l,
            })
        })
        .collect()
}

/// The square compositions `Σ_ℓ C(q-ℓ,q-2ℓ) Sq^{2n-p-ℓ}Sq^{n-q+ℓ} +
/// Σ_ℓ C(p-ℓ,p-2ℓ) Sq^{2n-q-ℓ}Sq^{n-p+ℓ}` with odd coefficient.
pub fn relation_terms(q: usize, p: usize, n: usize) -> Vec<RelationTerm> {
    let mut out = relation_half(p, q, n);
    out.extend(relation_half(q, p, n));
    out
}

fn relation_dim(q: usize, p: usize, n: usize) -> Result<usize> {
    (4 * n)
        .checked_sub(q + p)
        .ok_or_else(|| Error::InvalidArgument(format!("4n < q+p for (q,p,n) = ({q},{p},{n})")))
}

pub fn relation_cochain(q: usize, p: usize, n: usize, alpha: &Cochain) -> Result<Cochain> {
    let mut acc = Cochain::zero(alpha.model.clone(), relation_dim(q, p, n)?);
    for t in relation_terms(q, p, n) {
        acc = acc.add(&sq(t.outer_sq, &sq(t.inner_sq, alpha)?)?)?;
    }
    Ok(acc)
}

/// `N_{q,p,n}(α)`.
pub fn n_cochain(q: usize, p: usize, n: usize, alpha: &Cochain) -> Result<Cochain> {
    let dim = relation_dim(q, p, n)?
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidArgument("degree".into()))?;
    let mut acc = Cochain::zero(alpha.model.clone(), dim);
    for t in n_terms(q, p, n) {
        acc = acc.add(&cup_n(
            t.cup,
            &sq(t.sq_left, alpha)?,
            &sq(t.sq_right, alpha)?,
        )?)?;
    }
    Ok(acc)
}

/// Test spaces for certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TestSpace {
    /// `α = tⁿ` on `BΣ₂` truncated at the given dimension.
    BSigma2 { truncation: usize },
    /// `α = dβ` for a seeded random `β` on `Δ^dim`.
    Simplex { dim: usize, seed: u64 },
}

impl TestSpace {
    pub fn describe(&self) -> String {
        match self {
            TestSpace::BSigma2 { truncation } => {
                format!("t^n on B\u{3a3}2 truncated at {truncation}")
            }
            TestSpace::Simplex { dim, seed } => {
                format!("random coboundary on \u{394}^{dim}, seed {seed}")
            }
        }
    }

    pub fn cocycle(&self, n: usize) -> Result<Cochain> {
        match self {
            TestSpace::BSigma2 { truncation } => {
                Cochain::new(SpaceModel::b_sigma2(*truncation), n, [b_sigma2_cell(n)])
            }
            TestSpace::Simplex { dim, seed } => random_coboundary(*dim, n, *seed),
        }
    }

    /// The default spaces: `tⁿ` and three seeded coboundaries on a simplex
    /// large enough to carry the relation.
    pub fn defaults(q: usize, p: usize, n: usize) -> Vec<TestSpace> {
        let top = (4 * n).saturating_sub(q + p);
        let mut v = vec![TestSpace::BSigma2 {
            truncation: (3 * n + 2).max(top),
        }];
        v.extend((0..3).map(|seed| TestSpace::Simplex { dim: top + 1, seed }));
        v
    }
}

/// `dβ` for a random cochain `β` of degree `-(n-1)` on `Δ^dim`.
pub fn random_coboundary(dim: usize, n: usize, seed: u64) -> Result<Cochain> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a coboundary has positive degree".into(),
        ));
    }
    let model = SpaceModel::Standard { dim };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support: Vec<Simplex> = model
        .simplices(n - 1)
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Cochain::new(model, n - 1, support)?.coboundary()
}

/// Outcome of checking `dx(α) = relation(α)` on one test space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceVerdict {
    pub space: TestSpace,
    pub passed: bool,
    /// Whether `relation(α)` is nonzero on this space.
    pub nontrivial: bool,
    /// A simplex on which the identity fails, in its JSON encoding.
    pub offending: Option<Vec<u8>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdemCertificate {
    pub q: usize,
    pub p: usize,
    pub n: usize,
    pub witness: Vec<Vec<u8>>,
    pub relation: Vec<RelationTerm>,
    pub nqp: Vec<NTerm>,
    pub npq: Vec<NTerm>,
    pub verdicts: Vec<SpaceVerdict>,
}

impl AdemCertificate {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// `x(α) = TR(J)(α^{⊗4}) + N_{q,p,n}(α) + N_{p,q,n}(α)`.
pub fn x_cochain(w: &Witness, n: usize, alpha: &Cochain) -> Result<Cochain> {
    let (q, p) = (w.q, w.p);
    let main = surj_sum_on_power(&w.surjections, alpha, 4)?;
    main.add(&n_cochain(q, p, n, alpha)?)?
        .add(&n_cochain(p, q, n, alpha)?)
}

/// Checks `dx(α) = relation(α)` for a cocycle `α` of degree `-n`.
pub fn verify_on(w: &Witness, n: usize, alpha: &Cochain, space: TestSpace) -> Result<SpaceVerdict> {
    if alpha.dim != n {
        return Err(Error::DegreeMismatch(format!(
            "cocycle of degree {} for n = {n}",
            alpha.degree()
        )));
    }
    if !alpha.is_cocycle()? {
        return Err(Error::NotCocycle(space.describe()));
    }
    let dx = x_cochain(w, n, alpha)?.coboundary()?;
    let rel = relation_cochain(w.q, w.p, n, alpha)?;
    let diff = dx.add(&rel)?;
    Ok(SpaceVerdict {
        space,
        passed: diff.is_zero(),
        nontrivial: !rel.is_zero(),
        offending: diff.support.iter().next().map(|s| s.seq().to_vec()),
    })
}

pub fn make_certificate(
    q: usize,
    p: usize,
    n: usize,
    spaces: &[TestSpace],
) -> Result<AdemCertificate> {
    let w = witness(q, p)?;
    let verdicts = spaces
        .iter()
        .map(|sp| verify_on(&w, n, &sp.cocycle(n)?, sp.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdemCertificate {
        q,
        p,
        n,
        witness: w.surjections.iter().map(|s| s.values().to_vec()).collect(),
        relation: relation_terms(q, p, n),
        nqp: n_terms(q, p, n),
        npq: n_terms(p, q, n),
        verdicts,
    })
}

/// For each witness surjection acting on four inputs of degree `-n`:
/// `(surjections with some step diagram, surjections whose diagrams do not
/// cancel in pairs, total step diagrams of the latter)`.
pub fn diagram_census(w: &Witness, n: usize) -> (usize, usize, usize) {
    let (mut with_diagrams, mut generic, mut diagrams) = (0, 0, 0);
    for s in &w.surjections {
        let top = match (4 * n).checked_sub(s.degree()) {
            Some(t) => t,
            None => continue,
        };
        let (count, odd) = step_diagram_profile(s, n, top);
        if count > 0 {
            with_diagrams += 1;
        }
        if odd > 0 {
            generic += 1;
            diagrams += count;
        }
    }
    (with_diagrams, generic, diagrams)
}

/// Witness surjections whose cochain on `α^{⊗4}` is nonzero.
pub fn nonvanishing_on(w: &Witness, alpha: &Cochain) -> Result<Vec<Surjection>> {
    let mut out = Vec::new();
    for s in &w.surjections {
        if !surj_sum_on_power(&FormalSum::single(s.clone()), alpha, 4)?.is_zero() {
            out.push(s.clone());
        }
    }
    Ok(out)
}

/// `x̃_r ∘ (x̃_s, x̃_t)` in `EΣ4`, whose table reduction acts on `α^{⊗4}` as
/// `(α ⌣_s α) ⌣_r (α ⌣_t α)`.
pub fn block_cell(t: PhiBarTerm) -> Result<FormalSum<Simplex>> {
    let s2 = Group::sigma2();
    be_compose(
        (&s2, &e_sigma2_cell(t.r, t.twisted)),
        &[
            (&s2, &e_sigma2_cell(t.s, false)),
            (&s2, &e_sigma2_cell(t.t, false)),
        ],
    )
}

/// Surjections whose action on `α^{⊗4}` is `N_{q,p,n}(α) + N_{p,q,n}(α)` for
/// every `n`.
pub fn n_term_surjections(q: usize, p: usize) -> Result<FormalSum<Surjection>> {
    let s4 = Group::sigma4();
    let mut out = FormalSum::zero();
    for (a, b) in [(q, p), (p, q)] {
        for t in &phi_bar_coinvariant_closed(a, b).1 {
            out.add_sum(table_reduction_sum(&s4, &block_cell(*t)?)?);
        }
    }
    Ok(out)
}

/// The Surj formula for `x(α)` as a list: the table reduction of every simplex
/// of the three chains, without cancellation between simplices, followed by
/// [`n_term_surjections`].
pub fn formula_terms(w: &Witness) -> Result<Vec<Surjection>> {
    let s4 = Group::sigma4();
    let mut out = Vec::new();
    for c in &w.chains {
        for s in c {
            out.extend(table_reduction(&s4, s)?);
        }
    }
    out.extend(n_term_surjections(w.q, w.p)?);
    Ok(out)
}

/// `(surjections with a step diagram, total step diagrams)` for a list of
/// surjections acting on four inputs of degree `-n`.
pub fn list_census(list: &[Surjection], n: usize) -> (usize, usize) {
    let mut with = 0;
    let mut diagrams = 0;
    for s in list {
        if let Some(top) = (4 * n).checked_sub(s.degree()) {
            let (count, _) = step_diagram_profile(s, n, top);
            if count > 0 {
                with += 1;
                diagrams += count;
            }
        }
    }
    (with, diagrams)
}

/// `EZ Φ(x̃_q ⊗ x̃_p)` on `α^{⊗4}` through table reduction in `EΣ4`.
pub fn ez_phi_on_power(q: usize, p: usize, alpha: &Cochain) -> Result<Cochain> {
    let surj = table_reduction_sum(&Group::sigma4(), &d8_to_sigma4(&ez_phi(q, p)))?;
    surj_sum_on_power(&surj, alpha, 4)
}

/// The same cochain from the symmetric part and `d N_{q,p,n}`:
/// `Σ_ℓ C(p-ℓ,p-2ℓ) Sq^{n-p+ℓ}(α) ⌣_{q-p+2ℓ} Sq^{n-p+ℓ}(α) + d N_{q,p,n}(α)`.
pub fn ez_phi_direct(q: usize, p: usize, n: usize, alpha: &Cochain) -> Result<Cochain> {
    let dim = (4 * n)
        .checked_sub(q + p)
        .ok_or_else(|| Error::InvalidArgument("4n < q+p".into()))?;
    let mut acc = Cochain::zero(alpha.model.clone(), dim);
    for t in &phi_bar_coinvariant_closed(q, p).0 {
        let a = sq(n as i64 - t.s as i64, alpha)?;
        acc = acc.add(&cup_n(t.r as i64, &a, &a)?)?;
    }
    acc.add(&n_cochain(q, p, n, alpha)?.coboundary()?)
}

/// Coefficients in `Sq^a Sq^b = Σᵢ C(b-1-i, a-2i) Sq^{a+b-i} Sq^i` for `a < 2b`,
/// read off from the relation for `(q, p) = (2n-a, 2^m-1)` with
/// `n = 2^m - 1 + b`. Returns the pairs `(a+b-i, i)` with odd coefficient.
pub fn standard_adem_coeffs(a: usize, b: usize) -> Result<Vec<(i64, i64)>> {
    if a >= 2 * b {
        return Err(Error::InvalidArgument(format!(
            "Sq^{a}Sq^{b} is admissible"
        )));
    }
    let mut m = 1;
    while (1usize << m) <= 2 * (a + b) {
        m += 1;
    }
    let p = (1usize << m) - 1;
    let n = p + b;
    let q = 2 * n - a;
    let mut out: Vec<(i64, i64)> = relation_half(p, q, n)
        .into_iter()
        .filter(|t| t.inner_sq >= 0)
        .map(|t| (t.outer_sq, t.inner_sq))
        .collect();
    out.sort_by_key(|t| t.1);
    Ok(out)
}

/// `C(b-1-i, a-2i) mod 2`.
pub fn adem_coeff_closed(a: usize, b: usize, i: usize) -> bool {
    binom_mod2(b as i64 - 1 - i as i64, a as i64 - 2 * i as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(tw: bool, r: usize, s: usize, t: usize) -> PhiBarTerm {
        PhiBarTerm::new(tw, r, s, t)
    }

    #[test]
    fn phi_in_degree_zero() {
        let v = e_sigma2_cell(0, false);
        assert_eq!(phi(&v, &v), FormalSum::single((v.clone(), v.clone(), v)));
    }

    #[test]
    fn phi_bar_example() {
        let expect: FormalSum<PhiBarTerm> = [
            term(false, 1, 1, 1),
            term(false, 2, 0, 1),
            term(false, 2, 1, 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(phi_bar(2, 1), expect);
        let (s, ns) = phi_bar_closed(2, 1);
        assert_eq!(&s + &ns, expect);
        let (sh, nsh) = phi_bar_coinvariant_closed(2, 1);
        assert_eq!(sh, FormalSum::single(term(false, 1, 1, 1)));
        assert_eq!(nsh, FormalSum::single(term(false, 3, 0, 1)));
        assert_eq!(&sh + &coinvariant_boundary(&nsh), phi_bar_coinvariant(2, 1));
    }

    #[test]
    fn psi_is_the_inclusion_on_vertices() {
        for g in 0..4u8 {
            let v = Simplex::Seq(vec![g]);
            assert_eq!(psi(&v), FormalSum::single(iota(&v)));
        }
    }

    #[test]
    fn n_terms_examples() {
        let t = n_terms(2, 1, 5);
        assert_eq!(
            t,
            vec![NTerm {
                coeff: 1,
                sq_left: 5,
                cup: 3,
                sq_right: 4
            }]
        );
        assert!(n_terms(3, 0, 4).is_empty());
    }

    #[test]
    fn relation_for_four_one() {
        let r: Vec<(i64, i64)> = relation_terms(4, 1, 3)
            .into_iter()
            .map(|t| (t.outer_sq, t.inner_sq))
            .collect();
        assert_eq!(r, vec![(3, 1), (2, 2)]);
    }

    #[test]
    fn standard_adem_small_cases() {
        assert_eq!(standard_adem_coeffs(2, 2).unwrap(), vec![(3, 1)]);
        assert!(standard_adem_coeffs(1, 1).unwrap().is_empty());
        assert!(standard_adem_coeffs(3, 2).unwrap().is_empty());
        assert_eq!(standard_adem_coeffs(1, 2).unwrap(), vec![(3, 0)]);
        assert!(standard_adem_coeffs(4, 2).is_err());
    }

    #[test]
    fn j_psi_is_a_homotopy_small() {
        let e8 = e_d8();
        for (q, p) in [(1, 0), (1, 1), (2, 1)] {
            let x = x_tilde_product(q, p);
            let lhs = &boundary(&e8, &j_psi_sum(&x)) + &j_psi_sum(&boundary(&e_v4(), &x));
            let rhs = &ez_phi(q, p) + &x.iter().map(iota).collect();
            assert_eq!(lhs, rhs, "(q,p) = ({q},{p})");
        }
    }

    #[test]
    fn r_tilde_projects_to_zero_small() {
        assert!(r_tilde(0, 0).projection().is_zero());
        let r = r_tilde(2, 1);
        assert!(r.projection().is_zero());
        let s4 = Group::sigma4();
        for part in r.parts() {
            assert!(!project(&s4, part).is_zero());
        }
    }
}
