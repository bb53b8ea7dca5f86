//! Φ̄(x_q ⊗ x_p) in EΣ₂^{⊗3}, its closed form, and its Σ₂-coinvariants.

use steenrod_adem::adem::{
    coinvariant_boundary, phi_bar, phi_bar_closed, phi_bar_coinvariant, phi_bar_coinvariant_closed,
};

fn main() {
    for (q, p) in [(2, 1), (3, 1), (4, 1), (3, 2)] {
        let full = phi_bar(q, p);
        let (sym, nonsym) = phi_bar_closed(q, p);
        let co = phi_bar_coinvariant(q, p);
        let (s_hat, ns_hat) = phi_bar_coinvariant_closed(q, p);
        println!(
            "(q, p) = ({q}, {p}): {} terms, closed form agrees: {}",
            full.len(),
            full == &sym + &nonsym
        );
        println!("  coinvariant symmetric part:");
        for t in &s_hat {
            println!("    x_{} ⊗ x_{} ⊗ x_{}", t.r, t.s, t.t);
        }
        println!(
            "  {} nonsymmetric coinvariant terms, Ŝ + ∂N̂S agrees: {}",
            ns_hat.len(),
            co == &s_hat + &coinvariant_boundary(&ns_hat)
        );
    }
}
