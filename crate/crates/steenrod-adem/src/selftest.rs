//! A quick run of the main identities, used by the `selftest` subcommand.

use crate::adem::{
    boundary, e_d8, e_v4, ez_phi, iota, j_psi_sum, make_certificate, r_tilde, standard_adem_coeffs,
    x_tilde_product, TestSpace,
};
use crate::error::Result;
use crate::f2::FormalSum;
use crate::operads::{surj_boundary_sum, table_reduction, table_reduction_sum};
use crate::perm::Group;
use crate::simplicial::{b_sigma2_cell, Cochain, Simplex, SpaceModel};
use crate::steenrod::{
    aw_tilde_delta, bsigma2_cup_closed, cup_n, esigma2_aw_tilde_closed, partition_count,
    partition_parity_closed, PartitionConstraint,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((passed, detail)) => Check {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn t(i: usize, trunc: usize) -> Result<Cochain> {
    Cochain::new(SpaceModel::b_sigma2(trunc), i, [b_sigma2_cell(i)])
}

/// Random cochain of dimension `d` on `Δ^n`.
pub fn random_cochain(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Result<Cochain> {
    let m = SpaceModel::Standard { dim: n };
    let support: Vec<Simplex> = m
        .simplices(d)
        .into_iter()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Cochain::new(m, d, support)
}

pub fn run_all() -> Vec<Check> {
    vec![
        check(
            "cup products on BΣ2 match the binomial closed form (i, j, n ≤ 5)",
            || {
                let mut bad = 0;
                for i in 0..=5 {
                    for j in 0..=5 {
                        for n in 0..=5 {
                            let got = cup_n(n as i64, &t(i, 10)?, &t(j, 10)?)?;
                            let expect = bsigma2_cup_closed(i, j, n) && i + j >= n;
                            if got.is_zero() == expect {
                                bad += 1;
                            }
                        }
                    }
                }
                Ok((bad == 0, format!("{bad} mismatches in 216 cases")))
            },
        ),
        check(
            "enhanced diagonal on EΣ2 matches its closed form (n, k ≤ 4)",
            || {
                let e = SpaceModel::e_sigma2(usize::MAX);
                let mut bad = 0;
                for n in 0..=4 {
                    for k in 0..=4 {
                        for b in [false, true] {
                            for a in [false, true] {
                                let u = crate::simplicial::e_sigma2_cell(k, a);
                                if aw_tilde_delta(n, b, &e, &u)
                                    != esigma2_aw_tilde_closed(b, n, a, k)
                                {
                                    bad += 1;
                                }
                            }
                        }
                    }
                }
                Ok((bad == 0, format!("{bad} mismatches in 100 cases")))
            },
        ),
        check(
            "coboundary formula for cup-n products on Δ^5 (20 random pairs)",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(7);
                let mut bad = 0;
                for _ in 0..20 {
                    let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
                    let n = rng.gen_range(0..=i.min(j)) as i64;
                    let (a, b) = (
                        random_cochain(&mut rng, 5, i)?,
                        random_cochain(&mut rng, 5, j)?,
                    );
                    let lhs = cup_n(n, &a, &b)?.coboundary()?;
                    let mut rhs =
                        cup_n(n, &a.coboundary()?, &b)?.add(&cup_n(n, &a, &b.coboundary()?)?)?;
                    rhs = rhs
                        .add(&cup_n(n - 1, &a, &b)?)?
                        .add(&cup_n(n - 1, &b, &a)?)?;
                    if lhs != rhs {
                        bad += 1;
                    }
                }
                Ok((bad == 0, format!("{bad} failures")))
            },
        ),
        check(
            "J_Ψ is a homotopy from ι to Ψ on x̃_q × x̃_p (q + p ≤ 4)",
            || {
                let mut bad = 0;
                for (q, p) in [(1, 0), (2, 1), (1, 2), (3, 1), (2, 2)] {
                    let x = x_tilde_product(q, p);
                    let lhs =
                        &boundary(&e_d8(), &j_psi_sum(&x)) + &j_psi_sum(&boundary(&e_v4(), &x));
                    let rhs = &ez_phi(q, p) + &x.iter().map(iota).collect::<FormalSum<Simplex>>();
                    if lhs != rhs {
                        bad += 1;
                    }
                }
                Ok((bad == 0, format!("{bad} failures")))
            },
        ),
        check("R̃(q,p) projects to zero in BΣ4 (q + p ≤ 4)", || {
            let bad = [(1, 0), (2, 1), (3, 1), (2, 2)]
                .iter()
                .filter(|(q, p)| !r_tilde(*q, *p).projection().is_zero())
                .count();
            Ok((bad == 0, format!("{bad} failures")))
        }),
        check("table reduction commutes with the boundary on EΣ3", || {
            let s3 = Group::symmetric(3)?;
            let model = SpaceModel::EGroup {
                group: s3.clone(),
                truncation: usize::MAX,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let mut bad = 0;
            for _ in 0..30 {
                let len = rng.gen_range(1..5);
                let mut v = vec![rng.gen_range(0..6u8)];
                while v.len() < len {
                    let g = rng.gen_range(0..6u8);
                    if Some(&g) != v.last() {
                        v.push(g);
                    }
                }
                let s = Simplex::Seq(v);
                let lhs = table_reduction_sum(&s3, &model.boundary_simplex(&s))?;
                let rhs = surj_boundary_sum(&table_reduction(&s3, &s)?);
                if lhs != rhs {
                    bad += 1;
                }
            }
            Ok((bad == 0, format!("{bad} failures in 30 simplices")))
        }),
        check("certificate for (q, p, n) = (2, 1, 2)", || {
            let c = make_certificate(2, 1, 2, &TestSpace::defaults(2, 1, 2))?;
            Ok((c.passed(), format!("{} test spaces", c.verdicts.len())))
        }),
        check("Sq²Sq² = Sq³Sq¹", || {
            let c = standard_adem_coeffs(2, 2)?;
            Ok((c == vec![(3, 1)], format!("{c:?}")))
        }),
        check(
            "partition counts match their closed forms (N ≤ 8, M ≤ 4)",
            || {
                let mut bad = 0;
                for c in PartitionConstraint::ALL {
                    for total in 0..=8 {
                        for m in 1..=4 {
                            if (partition_count(total, m, c) % 2 == 1)
                                != partition_parity_closed(total, m, c)
                            {
                                bad += 1;
                            }
                        }
                    }
                }
                Ok((bad == 0, format!("{bad} mismatches")))
            },
        ),
    ]
}
