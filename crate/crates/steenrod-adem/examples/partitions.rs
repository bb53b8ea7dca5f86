//! Parities of ordered partition counts against their binomial closed forms.

use steenrod_adem::steenrod::{partition_count, partition_parity_closed, PartitionConstraint};

fn main() {
    for c in PartitionConstraint::ALL {
        let row: Vec<String> = (0..=10)
            .map(|total| partition_count(total, 3, c).to_string())
            .collect();
        let agree = (0..=10).all(|total| {
            (partition_count(total, 3, c) % 2 == 1) == partition_parity_closed(total, 3, c)
        });
        println!("{c:?} (M = 3): {} parity agrees: {agree}", row.join(" "));
    }
}
