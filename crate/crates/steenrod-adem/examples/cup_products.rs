//! Cup-n products and squares of the generators of H*(BΣ₂).

use steenrod_adem::simplicial::{b_sigma2_cell, Cochain, SpaceModel};
use steenrod_adem::steenrod::{cup_n, sq};

fn t(i: usize) -> Cochain {
    Cochain::new(SpaceModel::b_sigma2(12), i, [b_sigma2_cell(i)]).unwrap()
}

fn show(c: &Cochain) -> String {
    if c.is_zero() {
        "0".into()
    } else {
        format!("t^{}", c.dim)
    }
}

fn main() -> steenrod_adem::Result<()> {
    for (i, j, n) in [(2, 3, 0), (3, 3, 1), (2, 2, 1), (5, 3, 1), (4, 4, 4)] {
        println!("t^{i} cup_{n} t^{j} = {}", show(&cup_n(n, &t(i), &t(j))?));
    }
    for k in 0..=4 {
        println!("Sq^{k}(t^3) = {}", show(&sq(k, &t(3))?));
    }
    Ok(())
}
