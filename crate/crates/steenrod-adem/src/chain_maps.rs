//! Alexander–Whitney and Eilenberg–Zilber maps, diagonals, joins and the
//! chain homotopies built from them.

use crate::error::{Error, Result};
use crate::f2::FormalSum;
use crate::perm::Group;
use crate::simplicial::{Chain, Simplex, SpaceModel};

/// All staircase paths through `[0,d₁] × ... × [0,d_k]`, one index sequence
/// per factor. Paths are listed in lexicographic order of their step words.
pub fn staircases(dims: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let total: usize = dims.iter().sum();
    let mut out = Vec::new();
    let mut pos = vec![0usize; dims.len()];
    let mut paths: Vec<Vec<usize>> = dims.iter().map(|_| vec![0]).collect();
    fn rec(
        dims: &[usize],
        left: usize,
        pos: &mut [usize],
        paths: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if left == 0 {
            out.push(paths.clone());
            return;
        }
        for f in 0..dims.len() {
            if pos[f] < dims[f] {
                pos[f] += 1;
                for (g, p) in paths.iter_mut().enumerate() {
                    p.push(pos[g]);
                }
                rec(dims, left - 1, pos, paths, out);
                for p in paths.iter_mut() {
                    p.pop();
                }
                pos[f] -= 1;
            }
        }
    }
    rec(dims, total, &mut pos, &mut paths, &mut out);
    out
}

/// Eilenberg–Zilber shuffle map `N(X₁)⊗...⊗N(X_k) → N(X₁×...×X_k)` on one
/// tensor of simplices.
pub fn ez(models: &[SpaceModel], simplices: &[Simplex]) -> Chain {
    let product = SpaceModel::Product(models.to_vec());
    let dims: Vec<usize> = models
        .iter()
        .zip(simplices)
        .map(|(m, s)| m.dim(s))
        .collect();
    if models
        .iter()
        .zip(simplices)
        .any(|(m, s)| m.is_degenerate(s))
    {
        return Chain::zero(product);
    }
    let terms = staircases(&dims).into_iter().map(|path| {
        Simplex::Prod(
            models
                .iter()
                .zip(simplices)
                .zip(&path)
                .map(|((m, s), p)| m.restrict(s, p))
                .collect(),
        )
    });
    Chain::new(product, terms)
}

/// Alexander–Whitney map `N(X₁×...×X_k) → N(X₁)⊗...⊗N(X_k)` on one simplex:
/// front faces on the first factor, back faces on the last.
pub fn aw(model: &SpaceModel, s: &Simplex) -> Result<FormalSum<Vec<Simplex>>> {
    let factors = match model {
        SpaceModel::Product(fs) => fs,
        _ => return Err(Error::ModelMismatch("AW needs a product model".into())),
    };
    let n = model.dim(s);
    let comps = s.components();
    let k = factors.len();
    let mut out = FormalSum::zero();
    let mut cuts = vec![0usize; k + 1];
    cuts[k] = n;
    fn rec(
        f: usize,
        n: usize,
        cuts: &mut Vec<usize>,
        factors: &[SpaceModel],
        comps: &[Simplex],
        out: &mut FormalSum<Vec<Simplex>>,
    ) {
        let k = factors.len();
        if f == k {
            let mut tensor = Vec::with_capacity(k);
            for i in 0..k {
                let verts: Vec<usize> = (cuts[i]..=cuts[i + 1]).collect();
                let x = factors[i].restrict(&comps[i], &verts);
                if factors[i].is_degenerate(&x) {
                    return;
                }
                tensor.push(x);
            }
            out.toggle(tensor);
            return;
        }
        if f == k - 1 {
            rec(f + 1, n, cuts, factors, comps, out);
            return;
        }
        for c in cuts[f]..=n {
            cuts[f + 1] = c;
            rec(f + 1, n, cuts, factors, comps, out);
        }
    }
    rec(0, n, &mut cuts, factors, comps, &mut out);
    Ok(out)
}

/// Two-factor [`aw`] as pairs.
pub fn aw2(model: &SpaceModel, s: &Simplex) -> Result<FormalSum<(Simplex, Simplex)>> {
    Ok(aw(model, s)?
        .into_iter()
        .map(|mut v| {
            let y = v.pop().expect("two factors");
            (v.pop().expect("two factors"), y)
        })
        .collect())
}

/// The diagonal `AW_Δ(u) = Σ_j u(0..j) ⊗ u(j..n)`.
pub fn aw_diag(model: &SpaceModel, u: &Simplex) -> FormalSum<(Simplex, Simplex)> {
    let n = model.dim(u);
    let mut out = FormalSum::zero();
    for j in 0..=n {
        let front = model.restrict(u, &(0..=j).collect::<Vec<_>>());
        let back = model.restrict(u, &(j..=n).collect::<Vec<_>>());
        if !model.is_degenerate(&front) && !model.is_degenerate(&back) {
            out.toggle((front, back));
        }
    }
    out
}

/// Join of two simplices of `EG`: concatenation of vertex tuples, `None` when
/// degenerate.
pub fn join(a: &Simplex, b: &Simplex) -> Option<Simplex> {
    let (a, b) = (a.seq(), b.seq());
    if a.last() == b.first() {
        return None;
    }
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    Some(Simplex::Seq(v))
}

/// Bilinear extension of [`join`].
pub fn join_sums(a: &FormalSum<Simplex>, b: &FormalSum<Simplex>) -> FormalSum<Simplex> {
    let mut out = FormalSum::zero();
    for x in a {
        for y in b {
            if let Some(z) = join(x, y) {
                out.toggle(z);
            }
        }
    }
    out
}

type SimplexFn<'a> = Box<dyn Fn(&Simplex) -> FormalSum<Simplex> + Send + Sync + 'a>;

/// A chain map given on basis simplices.
pub struct ChainMap<'a> {
    pub source: SpaceModel,
    pub target: SpaceModel,
    f: SimplexFn<'a>,
}

impl<'a> ChainMap<'a> {
    pub fn new(
        source: SpaceModel,
        target: SpaceModel,
        f: impl Fn(&Simplex) -> FormalSum<Simplex> + Send + Sync + 'a,
    ) -> Self {
        Self {
            source,
            target,
            f: Box::new(f),
        }
    }

    pub fn on_simplex(&self, s: &Simplex) -> FormalSum<Simplex> {
        (self.f)(s)
    }

    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        if c.model != self.source {
            return Err(Error::ModelMismatch(
                "chain map applied outside its source".into(),
            ));
        }
        Ok(Chain {
            model: self.target.clone(),
            terms: c.terms.map_linear(|s| self.on_simplex(s)),
        })
    }
}

/// `J(z) = Σ_j φ₀(front_j z) * φ₁(back_{n-j} z)`, a homotopy between `φ₀` and
/// `φ₁` when both preserve the augmentation and the target is some `EG`.
pub fn homotopy_join(phi0: &ChainMap, phi1: &ChainMap, z: &Simplex) -> Result<FormalSum<Simplex>> {
    if !matches!(phi0.target, SpaceModel::EGroup { .. }) || phi0.target != phi1.target {
        return Err(Error::ModelMismatch(
            "homotopy_join needs two maps into the same EG".into(),
        ));
    }
    if phi0.source != phi1.source {
        return Err(Error::ModelMismatch(
            "homotopy_join needs maps with a common source".into(),
        ));
    }
    let m = &phi0.source;
    let n = m.dim(z);
    let mut out = FormalSum::zero();
    for j in 0..=n {
        let front = m.restrict(z, &(0..=j).collect::<Vec<_>>());
        let back = m.restrict(z, &(j..=n).collect::<Vec<_>>());
        if m.is_degenerate(&front) || m.is_degenerate(&back) {
            continue;
        }
        out.add_sum(join_sums(&phi0.on_simplex(&front), &phi1.on_simplex(&back)));
    }
    Ok(out)
}

/// `J_g(g₀, ..., gₙ) = Σ_j (g₀, ..., g_j, g_j g⁻¹, ..., gₙ g⁻¹)`, a homotopy
/// between the identity and right translation by `g⁻¹`.
pub fn j_g(group: &Group, g: u8, s: &Simplex) -> FormalSum<Simplex> {
    let v = s.seq();
    let gi = group.inv(g);
    let mut out = FormalSum::zero();
    for j in 0..v.len() {
        let mut w: Vec<u8> = v[..=j].to_vec();
        w.extend(v[j..].iter().map(|&x| group.mul(x, gi)));
        if w.windows(2).all(|p| p[0] != p[1]) {
            out.toggle(Simplex::Seq(w));
        }
    }
    out
}

/// The homotopy between `φ₀` and `φ₁` obtained by sending `z` to
/// `EZ(z ⊗ (0,1))` in `X × Δ¹` and then each simplex `(t, 0...01...1)` to
/// `φ₀(t₀..t_ℓ) * φ₁(t_{ℓ+1}..tₙ)`. It agrees with [`homotopy_join`].
#[cfg(test)]
pub(crate) fn homotopy_via_cylinder(
    phi0: &ChainMap,
    phi1: &ChainMap,
    z: &Simplex,
) -> FormalSum<Simplex> {
    let m = &phi0.source;
    let interval = SpaceModel::Standard { dim: 1 };
    let cyl = ez(
        &[m.clone(), interval],
        &[z.clone(), Simplex::Seq(vec![0, 1])],
    );
    let mut out = FormalSum::zero();
    for s in &cyl.terms {
        let c = s.components();
        let (t, u) = (&c[0], c[1].seq());
        let n = m.dim(t);
        let l = u.iter().filter(|&&x| x == 0).count() - 1;
        let front = m.restrict(t, &(0..=l).collect::<Vec<_>>());
        let back = m.restrict(t, &(l + 1..=n).collect::<Vec<_>>());
        if m.is_degenerate(&front) || m.is_degenerate(&back) {
            continue;
        }
        out.add_sum(join_sums(&phi0.on_simplex(&front), &phi1.on_simplex(&back)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::e_sigma2_cell;

    fn seq(v: &[u8]) -> Simplex {
        Simplex::Seq(v.to_vec())
    }

    fn delta(n: usize) -> SpaceModel {
        SpaceModel::Standard { dim: n }
    }

    #[test]
    fn aw_on_the_square() {
        let m = SpaceModel::Product(vec![delta(1), delta(1)]);
        let s = Simplex::Prod(vec![seq(&[0, 1]), seq(&[0, 1])]);
        let expect: FormalSum<(Simplex, Simplex)> =
            [(seq(&[0]), seq(&[0, 1])), (seq(&[0, 1]), seq(&[1]))]
                .into_iter()
                .collect();
        assert_eq!(aw2(&m, &s).unwrap(), expect);
    }

    #[test]
    fn ez_on_the_square() {
        let c = ez(&[delta(1), delta(1)], &[seq(&[0, 1]), seq(&[0, 1])]);
        let expect = [
            Simplex::Prod(vec![seq(&[0, 1, 1]), seq(&[0, 0, 1])]),
            Simplex::Prod(vec![seq(&[0, 0, 1]), seq(&[0, 1, 1])]),
        ];
        assert_eq!(c.terms, expect.into_iter().collect());
        let e = SpaceModel::e_sigma2(4);
        let v = ez(&[e.clone(), e], &[seq(&[0]), seq(&[0])]);
        assert_eq!(v.terms.len(), 1);
    }

    #[test]
    fn staircase_counts_are_multinomial() {
        assert_eq!(staircases(&[2, 3]).len(), 10);
        assert_eq!(staircases(&[1, 1, 2]).len(), 12);
        assert_eq!(staircases(&[0, 0]).len(), 1);
    }

    #[test]
    fn aw_after_ez_is_identity() {
        let m = [delta(3), delta(2)];
        let combos = crate::simplicial::combinations;
        for p in 0..=3 {
            for q in 0..=2 {
                for a in combos(4, p + 1) {
                    for b in combos(3, q + 1) {
                        let x = seq(&a.iter().map(|&v| v as u8).collect::<Vec<_>>());
                        let y = seq(&b.iter().map(|&v| v as u8).collect::<Vec<_>>());
                        let c = ez(&m, &[x.clone(), y.clone()]);
                        let back = c.terms.map_linear(|s| aw2(&c.model, s).unwrap());
                        assert_eq!(back, FormalSum::single((x, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn joins_and_augmentation() {
        assert_eq!(join(&seq(&[0]), &seq(&[1])), Some(seq(&[0, 1])));
        assert_eq!(join(&seq(&[1]), &seq(&[1])), None);
        let e = SpaceModel::e_sigma2(4);
        assert!(Chain::single(e.clone(), seq(&[0])).augmentation());
        assert!(!Chain::single(e.clone(), e_sigma2_cell(1, false)).augmentation());
        assert!(!Chain::new(e, [seq(&[0]), seq(&[1])]).augmentation());
    }

    #[test]
    fn j_g_in_degree_zero() {
        let s4 = Group::sigma4();
        let g = s4.element_by_name("1324").unwrap();
        let x = s4.element_by_name("3412").unwrap();
        let expect = seq(&[x, s4.mul(x, s4.inv(g))]);
        assert_eq!(j_g(&s4, g, &seq(&[x])), FormalSum::single(expect));
    }

    fn identity_map(m: &SpaceModel) -> ChainMap<'static> {
        let m2 = m.clone();
        ChainMap::new(m.clone(), m.clone(), move |s| {
            if m2.is_degenerate(s) {
                FormalSum::zero()
            } else {
                FormalSum::single(s.clone())
            }
        })
    }

    #[test]
    fn joins_of_equal_maps_give_zero_in_degree_zero() {
        let e = SpaceModel::e_sigma2(6);
        let id = identity_map(&e);
        assert!(homotopy_join(&id, &id, &seq(&[0])).unwrap().is_zero());
    }

    #[test]
    fn homotopy_identities_on_sigma4() {
        let s4 = Group::sigma4();
        let e = SpaceModel::EGroup {
            group: s4.clone(),
            truncation: 8,
        };
        let g = s4.element_by_name("1324").unwrap();
        let gi = s4.inv(g);
        let id = identity_map(&e);
        let s4b = s4.clone();
        let e2 = e.clone();
        let right = ChainMap::new(e.clone(), e.clone(), move |s| {
            let w: Vec<u8> = s.seq().iter().map(|&x| s4b.mul(x, gi)).collect();
            let w = Simplex::Seq(w);
            if e2.is_degenerate(&w) {
                FormalSum::zero()
            } else {
                FormalSum::single(w)
            }
        });
        for word in [vec![0u8, 5, 17], vec![3, 9, 3, 22], vec![1, 2, 3, 4, 5]] {
            let z = seq(&word);
            let jz = Chain {
                model: e.clone(),
                terms: j_g(&s4, g, &z),
            };
            let dz = Chain::single(e.clone(), z.clone()).boundary();
            let lhs = &jz.boundary().terms + &dz.terms.map_linear(|f| j_g(&s4, g, f));
            let rhs = &id.on_simplex(&z) + &right.on_simplex(&z);
            assert_eq!(lhs, rhs);
            let joined = homotopy_join(&id, &right, &z).unwrap();
            let dj = Chain {
                model: e.clone(),
                terms: joined.clone(),
            }
            .boundary()
            .terms;
            let jd = dz
                .terms
                .map_linear(|f| homotopy_join(&id, &right, f).unwrap());
            assert_eq!(&dj + &jd, rhs);
            assert_eq!(homotopy_via_cylinder(&id, &right, &z), joined);
        }
    }
}
