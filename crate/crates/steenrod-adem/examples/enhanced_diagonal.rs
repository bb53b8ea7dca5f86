//! The enhanced diagonal on EΣ₂ and on a standard simplex.

use steenrod_adem::simplicial::{e_sigma2_cell, Simplex, SpaceModel};
use steenrod_adem::steenrod::{aw_tilde_delta, enumerate_diagrams, esigma2_aw_tilde_closed};

fn main() {
    let e = SpaceModel::e_sigma2(usize::MAX);
    let u = e_sigma2_cell(3, false);
    let terms = aw_tilde_delta(1, false, &e, &u);
    println!("AW~(x_1 ⊗ x_3) has {} terms:", terms.len());
    for (a, b) in &terms {
        println!("  {a:?} ⊗ {b:?}");
    }
    assert_eq!(terms, esigma2_aw_tilde_closed(false, 1, false, 3));

    let delta = SpaceModel::Standard { dim: 4 };
    let top = Simplex::Seq(vec![0, 1, 2, 3, 4]);
    for n in 0..=4 {
        println!(
            "n = {n}: {} interval diagrams, {} surviving terms on Δ^4",
            enumerate_diagrams(n, 4).len(),
            aw_tilde_delta(n, false, &delta, &top).len()
        );
    }
}
