//! Adem relations in their standard form.

use steenrod_adem::adem::standard_adem_coeffs;

fn main() -> steenrod_adem::Result<()> {
    for b in 1..=5 {
        for a in 1..2 * b {
            let rhs = standard_adem_coeffs(a, b)?;
            let rhs = if rhs.is_empty() {
                "0".to_string()
            } else {
                rhs.iter()
                    .map(|(x, y)| format!("Sq^{x}Sq^{y}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            println!("Sq^{a}Sq^{b} = {rhs}");
        }
    }
    Ok(())
}
