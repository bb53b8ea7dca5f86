//! Builds and checks an Adem certificate for (q, p, n) = (3, 1, 2).

use steenrod_adem::adem::{make_certificate, n_terms, relation_terms, TestSpace};

fn main() -> steenrod_adem::Result<()> {
    let (q, p, n) = (3, 1, 2);
    for t in relation_terms(q, p, n) {
        println!("relation term Sq^{} Sq^{}", t.outer_sq, t.inner_sq);
    }
    for t in n_terms(q, p, n)
        .into_iter()
        .chain(n_terms(p, q, n))
        .filter(|t| t.sq_right >= 0)
    {
        println!("N term Sq^{} cup_{} Sq^{}", t.sq_left, t.cup, t.sq_right);
    }
    let cert = make_certificate(q, p, n, &TestSpace::defaults(q, p, n))?;
    println!("witness: {} surjections", cert.witness.len());
    for v in &cert.verdicts {
        println!(
            "  {}: {}",
            v.space.describe(),
            if v.passed { "ok" } else { "FAILED" }
        );
    }
    assert!(cert.passed());
    Ok(())
}
