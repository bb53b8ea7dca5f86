//! Permutations, finite group tables, the dihedral group D8 inside Σ4 and the
//! block composition of the symmetric-group operad.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// A permutation of `{1, ..., n}` in sequence notation `(σ(1) ... σ(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(seq: Vec<u8>) -> Result<Self> {
        let n = seq.len();
        let mut seen = vec![false; n + 1];
        for &v in &seq {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(seq.clone()));
            }
            seen[v] = true;
        }
        Ok(Self(seq))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    /// Parses compact sequence notation such as `"3412"`.
    pub fn parse(s: &str) -> Result<Self> {
        let seq: Option<Vec<u8>> = s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        match seq {
            Some(seq) => Self::new(seq),
            None => Err(Error::Parse(format!("bad permutation {s:?}"))),
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize - 1] = i as u8 + 1;
        }
        Self(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `(σ∘τ)(i) = σ(τ(i))`.
pub fn compose(sigma: &Permutation, tau: &Permutation) -> Result<Permutation> {
    if sigma.degree() != tau.degree() {
        return Err(Error::DegreeMismatch(format!(
            "compose: Σ{} with Σ{}",
            sigma.degree(),
            tau.degree()
        )));
    }
    Ok(Permutation(
        tau.0.iter().map(|&t| sigma.0[t as usize - 1]).collect(),
    ))
}

/// `g x g⁻¹`.
pub fn conjugate(g: &Permutation, x: &Permutation) -> Result<Permutation> {
    compose(&compose(g, x)?, &g.inverse())
}

/// Operad composition `σ(τ₁, ..., τ_r)`.
///
/// Reading the result left to right visits the blocks in the order
/// `σ(1), ..., σ(r)`, and block `i` is read in the order given by `τᵢ`. This is
/// the composition of the operations `(β₁, ..., β_r) ↦ β_{σ(1)} ⌣ ... ⌣ β_{σ(r)}`.
pub fn block_compose(sigma: &Permutation, taus: &[Permutation]) -> Result<Permutation> {
    if sigma.degree() != taus.len() {
        return Err(Error::DegreeMismatch(format!(
            "block_compose: Σ{} with {} inner permutations",
            sigma.degree(),
            taus.len()
        )));
    }
    let mut offsets = Vec::with_capacity(taus.len());
    let mut total = 0usize;
    for t in taus {
        offsets.push(total);
        total += t.degree();
    }
    let mut out = Vec::with_capacity(total);
    for k in 1..=sigma.degree() {
        let b = sigma.apply(k) - 1;
        for &v in taus[b].as_slice() {
            out.push((offsets[b] + v as usize) as u8);
        }
    }
    Ok(Permutation(out))
}

/// An element `c^{ε₃} b^{ε₂} a^{ε₁}` of D8, identified with the vertex
/// `(T^{ε₁}, T^{ε₂}, T^{ε₃})` of `EΣ₂³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleCode {
    pub e1: bool,
    pub e2: bool,
    pub e3: bool,
}

impl TripleCode {
    pub const IDENTITY: TripleCode = TripleCode {
        e1: false,
        e2: false,
        e3: false,
    };

    pub fn new(e1: bool, e2: bool, e3: bool) -> Self {
        Self { e1, e2, e3 }
    }

    /// Packed index `ε₁ + 2ε₂ + 4ε₃`.
    pub fn index(self) -> u8 {
        self.e1 as u8 | (self.e2 as u8) << 1 | (self.e3 as u8) << 2
    }

    pub fn from_index(i: u8) -> Self {
        Self {
            e1: i & 1 != 0,
            e2: i & 2 != 0,
            e3: i & 4 != 0,
        }
    }

    pub fn name(self) -> String {
        let mut s = String::new();
        if self.e3 {
            s.push('c');
        }
        if self.e2 {
            s.push('b');
        }
        if self.e1 {
            s.push('a');
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// Product in D8, normalising the word
/// `c^{δ₃} b^{δ₂} a^{δ₁} · c^{ε₃} b^{ε₂} a^{ε₁}` with `ab = ca`, `ac = ba`,
/// `bc = cb` and `a² = b² = c² = 1`.
pub fn triple_mult(x: TripleCode, y: TripleCode) -> TripleCode {
    // Moving a^{δ₁} to the right across c^{ε₃} b^{ε₂} swaps the letters b and c.
    let (c_pow, b_pow) = if x.e1 { (y.e2, y.e3) } else { (y.e3, y.e2) };
    TripleCode {
        e1: x.e1 ^ y.e1,
        e2: x.e2 ^ b_pow,
        e3: x.e3 ^ c_pow,
    }
}

/// The embedding D8 → Σ4, `(ε₁, ε₂, ε₃) ↦ T^{ε₁}(T^{ε₂}, T^{ε₃})`.
pub fn triple_to_perm(t: TripleCode) -> Permutation {
    let sw = |e: bool| {
        if e {
            Permutation(vec![2, 1])
        } else {
            Permutation::identity(2)
        }
    };
    block_compose(&sw(t.e1), &[sw(t.e2), sw(t.e3)]).expect("arity 2")
}

/// The transposition (23) of Σ4, written `(1324)`.
pub fn transposition_23() -> Permutation {
    Permutation(vec![1, 3, 2, 4])
}

/// The inclusion V4 = Σ₂×Σ₂ → D8 sending the generators to `a` and `bc`.
pub fn v4_to_triple(e1: bool, e2: bool) -> TripleCode {
    TripleCode { e1, e2, e3: e2 }
}

/// A finite group with elements indexed by `u8`; index 0 is the identity.
#[derive(Debug)]
pub struct GroupTable {
    name: String,
    names: Vec<String>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    perms: Option<Vec<Permutation>>,
}

/// Shared handle to a [`GroupTable`]; groups compare by name.
#[derive(Clone, Debug)]
pub struct Group(Arc<GroupTable>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.0.name == other.0.name
    }
}

impl Eq for Group {}

impl Group {
    fn from_mul(
        name: String,
        names: Vec<String>,
        mul: Vec<u8>,
        perms: Option<Vec<Permutation>>,
    ) -> Self {
        let n = names.len();
        let inv = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mul[g * n + h] == 0)
                    .expect("group inverse") as u8
            })
            .collect();
        Group(Arc::new(GroupTable {
            name,
            names,
            mul,
            inv,
            perms,
        }))
    }

    /// Σₙ with elements in lexicographic order of their sequences.
    pub fn symmetric(n: usize) -> Result<Group> {
        static CACHE: [OnceLock<Group>; 6] = [const { OnceLock::new() }; 6];
        if n == 0 || n > 5 {
            return Err(Error::Unsupported(format!("Σ{n} (supported: 1 ≤ n ≤ 5)")));
        }
        Ok(CACHE[n].get_or_init(|| Self::build_symmetric(n)).clone())
    }

    fn build_symmetric(n: usize) -> Group {
        let mut perms = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            perms.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index = |p: &Permutation| perms.binary_search(p).expect("permutation index") as u8;
        let m = perms.len();
        let mut mul = vec![0u8; m * m];
        for (i, x) in perms.iter().enumerate() {
            for (j, y) in perms.iter().enumerate() {
                mul[i * m + j] = index(&compose(x, y).expect("same degree"));
            }
        }
        let names = perms
            .iter()
            .map(|p| {
                if p.is_identity() {
                    "1".to_string()
                } else if n == 2 {
                    "T".to_string()
                } else {
                    p.to_string()
                }
            })
            .collect();
        Group::from_mul(format!("S{n}"), names, mul, Some(perms))
    }

    pub fn sigma2() -> Group {
        Self::symmetric(2).expect("Σ2")
    }

    pub fn sigma4() -> Group {
        Self::symmetric(4).expect("Σ4")
    }

    /// Σ₂×Σ₂ with `(ε₁, ε₂)` stored at index `ε₁ + 2ε₂`.
    pub fn v4() -> Group {
        static G: OnceLock<Group> = OnceLock::new();
        G.get_or_init(|| {
            let mul = (0..16u8).map(|k| (k / 4) ^ (k % 4)).collect();
            let names = ["1", "a", "bc", "abc"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            Group::from_mul("V4".into(), names, mul, None)
        })
        .clone()
    }

    /// D8 with elements stored by [`TripleCode::index`].
    pub fn d8() -> Group {
        static G: OnceLock<Group> = OnceLock::new();
        G.get_or_init(|| {
            let mut mul = vec![0u8; 64];
            for i in 0..8u8 {
                for j in 0..8u8 {
                    mul[(i * 8 + j) as usize] =
                        triple_mult(TripleCode::from_index(i), TripleCode::from_index(j)).index();
                }
            }
            let names = (0..8).map(|i| TripleCode::from_index(i).name()).collect();
            Group::from_mul("D8".into(), names, mul, None)
        })
        .clone()
    }

    pub fn by_name(name: &str) -> Result<Group> {
        match name {
            "V4" => Ok(Self::v4()),
            "D8" => Ok(Self::d8()),
            _ => match name.strip_prefix('S').and_then(|n| n.parse().ok()) {
                Some(n) => Self::symmetric(n),
                None => Err(Error::Parse(format!("unknown group {name:?}"))),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.names.len()
    }

    pub fn mul(&self, g: u8, h: u8) -> u8 {
        self.0.mul[g as usize * self.order() + h as usize]
    }

    pub fn inv(&self, g: u8) -> u8 {
        self.0.inv[g as usize]
    }

    pub fn element_name(&self, g: u8) -> &str {
        &self.0.names[g as usize]
    }

    pub fn element_by_name(&self, name: &str) -> Result<u8> {
        if let Some(i) = self.0.names.iter().position(|n| n == name) {
            return Ok(i as u8);
        }
        if let Some(perms) = &self.0.perms {
            if let Ok(p) = Permutation::parse(name) {
                if let Ok(i) = perms.binary_search(&p) {
                    return Ok(i as u8);
                }
            }
        }
        Err(Error::Parse(format!(
            "{name:?} is not an element of {}",
            self.name()
        )))
    }

    /// The permutation of element `g`, for symmetric groups.
    pub fn perm(&self, g: u8) -> Option<&Permutation> {
        self.0.perms.as_ref().map(|p| &p[g as usize])
    }

    pub fn perm_index(&self, p: &Permutation) -> Result<u8> {
        let perms = self.0.perms.as_ref().ok_or_else(|| {
            Error::Unsupported(format!("{} is not a symmetric group", self.name()))
        })?;
        perms
            .binary_search(p)
            .map(|i| i as u8)
            .map_err(|_| Error::DegreeMismatch(format!("{p} is not in {}", self.name())))
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Index in Σ4 of the image of each D8 element, by [`TripleCode::index`].
pub fn d8_in_sigma4() -> [u8; 8] {
    let s4 = Group::sigma4();
    let mut out = [0u8; 8];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = s4
            .perm_index(&triple_to_perm(TripleCode::from_index(i as u8)))
            .expect("Σ4");
    }
    out
}
