//! The homotopy J_Ψ between ι and Ψ on products of EΣ₂ cells.

use steenrod_adem::adem::{boundary, e_d8, e_v4, ez_phi, iota, j_psi_sum, x_tilde_product};
use steenrod_adem::f2::FormalSum;
use steenrod_adem::simplicial::Simplex;

fn main() {
    for (q, p) in [(1, 0), (2, 1), (3, 1), (2, 2), (3, 2)] {
        let x = x_tilde_product(q, p);
        let j = j_psi_sum(&x);
        let lhs = &boundary(&e_d8(), &j) + &j_psi_sum(&boundary(&e_v4(), &x));
        let rhs = &ez_phi(q, p) + &x.iter().map(iota).collect::<FormalSum<Simplex>>();
        println!(
            "(q, p) = ({q}, {p}): {} product simplices, J_Ψ has {} terms, ∂J + J∂ = Ψ + ι: {}",
            x.len(),
            j.len(),
            lhs == rhs
        );
    }
}
