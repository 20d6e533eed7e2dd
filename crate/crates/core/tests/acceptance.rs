//! The eleven acceptance criteria. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use kdelta::cli::{catalog, evaluate_all, CatalogEntry, InstanceKind, StabilityReport};
use kdelta::exactgeom::{int, parse_rat, rat, Apex, Polytope, QMat, QVec, Rat};
use kdelta::logcurve::{
    alpha_g_p1, alpha_log_p1, delta_g_p1, delta_log_p1, group_invariants, BranchSignature,
    GroupFamily,
};
use kdelta::measure::{dh_density, integrate_over, simplex_monomial_integral, PolyDensity};
use kdelta::spherical::{toric_embed, ColoredEdge, SphericalFanoData, SphericalInput};
use kdelta::toric::{delta_toric, verdict_toric, ToricFano};
use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(c: &[i64]) -> QVec {
    QVec::from_ints(c)
}

fn reports() -> &'static [(CatalogEntry, StabilityReport)] {
    use std::sync::OnceLock;
    static REPORTS: OnceLock<Vec<(CatalogEntry, StabilityReport)>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        let entries = catalog();
        evaluate_all(&entries)
            .into_iter()
            .zip(entries)
            .map(|((id, r), e)| (e, r.unwrap_or_else(|err| panic!("{id}: {err}"))))
            .collect()
    })
}

fn report(id: &str) -> &'static StabilityReport {
    &reports()
        .iter()
        .find(|(e, _)| e.id == id)
        .unwrap_or_else(|| panic!("no catalog entry {id}"))
        .1
}

fn c1_cyclic_quotients() -> Outcome {
    for m in 2..=50 {
        let g = GroupFamily::Cyclic(m);
        let (a, d) = (
            alpha_g_p1(g).map_err(|e| e.to_string())?,
            delta_g_p1(g).map_err(|e| e.to_string())?,
        );
        ensure!(
            a == rat(1, 2) && d == int(1),
            "cyclic({m}): alpha {a}, delta {d}"
        );
    }
    Ok("alpha_G = 1/2 and delta_G = 1 for m = 2..50".into())
}

fn c2_log_pairs() -> Outcome {
    for m in 2..=50 {
        let sig = BranchSignature::new(vec![m, m]).map_err(|e| e.to_string())?;
        let (a, d) = (alpha_log_p1(&sig), delta_log_p1(&sig));
        ensure!(
            a == rat(1, 2) && d == int(1),
            "({m},{m}): alpha {a}, delta {d}"
        );
    }
    Ok("alpha = 1/2 and delta = 1 for signatures (m,m), m = 2..50".into())
}

/// Classical orders and branch data of the finite subgroups of PGL(2).
fn classical(id: &str) -> Option<(u32, Vec<u32>)> {
    let (family, param) = match id.split_once('-') {
        Some((f, p)) => (f, p.parse::<u32>().ok()?),
        None => (id, 0),
    };
    match family {
        "cyclic" => Some((param, vec![param, param])),
        "dihedral" => Some((2 * param, vec![2, 2, param])),
        "tetrahedral" => Some((12, vec![2, 3, 3])),
        "octahedral" => Some((24, vec![2, 3, 4])),
        "icosahedral" => Some((60, vec![2, 3, 5])),
        _ => None,
    }
}

fn c3_ramification_coherence() -> Outcome {
    let mut n = 0;
    for (entry, r) in reports() {
        if entry.instance.kind() != InstanceKind::P1Group {
            continue;
        }
        let (order, sig) =
            classical(&entry.id).ok_or_else(|| format!("unrecognized group {}", entry.id))?;
        let orbit = Rat::from_integer(BigInt::from(order / sig.iter().max().unwrap()));
        let delta = parse_rat(&r.delta).map_err(|e| e.to_string())?;
        let alpha = parse_rat(r.alpha.as_deref().unwrap_or("?")).map_err(|e| e.to_string())?;
        ensure!(
            delta == orbit,
            "{}: delta {delta}, shortest orbit {orbit}",
            entry.id
        );
        ensure!(
            delta == &alpha * int(2),
            "{}: delta {delta} is not twice alpha {alpha}",
            entry.id
        );
        let g = match entry.id.split_once('-') {
            Some(("cyclic", p)) => GroupFamily::Cyclic(p.parse().unwrap()),
            Some(("dihedral", p)) => GroupFamily::Dihedral(p.parse().unwrap()),
            _ => GroupFamily::parse(&entry.id, None).map_err(|e| e.to_string())?,
        };
        let inv = group_invariants(g).map_err(|e| e.to_string())?;
        ensure!(
            inv.delta == delta && inv.min_orbit_length * sig.iter().max().unwrap() == order,
            "{}",
            entry.id
        );
        n += 1;
    }
    ensure!(n == 13, "expected 13 catalog groups, found {n}");
    Ok(format!(
        "delta_G = |G|/max m_i = 2 alpha_G for all {n} catalog groups"
    ))
}

fn c4_toric_formula() -> Outcome {
    let fans: [(&str, &[&[i64]]); 4] = [
        ("P^1", &[&[1], &[-1]]),
        ("P^2", &[&[1, 0], &[0, 1], &[-1, -1]]),
        ("P^3", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
        ("P^1 x P^1", &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]),
    ];
    for (name, rays) in fans {
        let d = delta_toric(&ToricFano::from_ints(rays).map_err(|e| e.to_string())?).value;
        ensure!(d == int(1), "delta({name}) = {d}");
    }
    let rays: &[&[i64]] = &[&[1, 0], &[0, 1], &[1, 1], &[-1, -1]];
    let x = ToricFano::from_ints(rays).map_err(|e| e.to_string())?;
    // Hand triangulation of the pentagon: barycenter (1/12, 1/12).
    let bar = QVec::new(vec![rat(1, 12), rat(1, 12)]);
    ensure!(x.barycenter() == &bar, "barycenter {}", x.barycenter());
    let hand = rays
        .iter()
        .map(|v| Rat::one() / (Rat::one() + bar.dot(&q(v))))
        .min()
        .unwrap();
    let d = delta_toric(&x);
    ensure!(
        d.value == rat(6, 7) && hand == d.value,
        "delta(Bl_1 P^2) = {}",
        d.value
    );
    ensure!(d.witness == q(&[1, 1]), "witness {}", d.witness);
    Ok("delta = 1 for P^1, P^2, P^3, P^1 x P^1; delta(Bl_1 P^2) = 6/7 at ray (1,1)".into())
}

fn c5_inequalities() -> Outcome {
    let alpha_of =
        |id: &str| -> Option<Rat> { report(id).alpha.as_deref().and_then(|a| parse_rat(a).ok()) };
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (entry, r) in reports() {
        let n: usize = match &entry.instance.body {
            kdelta::cli::instance::InstanceBody::Toric(t) => t.rank,
            kdelta::cli::instance::InstanceBody::Spherical(s) => s.t_rank,
            _ => 1,
        };
        let alpha =
            alpha_of(&entry.id).or_else(|| entry.id.strip_suffix("-spherical").and_then(alpha_of));
        let (Some(alpha), Ok(delta)) = (alpha, parse_rat(&r.delta)) else {
            skipped.push(entry.id.clone());
            continue;
        };
        let n_rat = Rat::from_integer(BigInt::from(n));
        ensure!(
            alpha > Rat::from_integer(0.into()),
            "{}: alpha {alpha}",
            entry.id
        );
        ensure!(
            alpha <= delta,
            "{}: alpha {alpha} > delta {delta}",
            entry.id
        );
        ensure!(
            delta <= &alpha * (&n_rat + int(1)),
            "{}: delta {delta} > (n+1) alpha",
            entry.id
        );
        ensure!(
            &alpha * (Rat::one() + Rat::one() / &n_rat) <= delta,
            "{}: (1+1/n) alpha > delta {delta}",
            entry.id
        );
        checked += 1;
    }
    Ok(format!(
        "chain holds on {checked} instances; no finite alpha for {}",
        skipped.join(", ")
    ))
}

fn c6_beta_bridge() -> Outcome {
    for (entry, r) in reports() {
        let expected = match parse_rat(&r.delta) {
            Ok(d) => d.min(Rat::one()),
            Err(_) if r.delta == "inf" => Rat::one(),
            Err(e) => return Err(format!("{}: {e}", entry.id)),
        };
        ensure!(
            parse_rat(&r.beta).ok() == Some(expected.clone()),
            "{}: beta {} vs {expected}",
            entry.id,
            r.beta
        );
    }
    Ok(format!(
        "beta = min(1, delta) on all {} catalog instances",
        reports().len()
    ))
}

fn c7_cross_pipeline() -> Outcome {
    let mut n = 0;
    for (entry, _) in reports() {
        if let kdelta::cli::instance::InstanceBody::Toric(_) = entry.instance.body {
            let kdelta::cli::Instance::Toric(x) =
                entry.instance.build().map_err(|e| e.to_string())?
            else {
                unreachable!()
            };
            let sph = toric_embed(&x)
                .and_then(|d| d.delta_spherical())
                .map_err(|e| e.to_string())?;
            let tor = delta_toric(&x).value;
            ensure!(
                sph.value.finite() == Some(&tor),
                "{}: toric {tor}, spherical {}",
                entry.id,
                sph.value
            );
            n += 1;
        }
    }
    ensure!(n >= 7, "only {n} toric entries");
    Ok(format!(
        "toric and spherical delta agree on {n} toric catalog entries"
    ))
}

fn c8_df_well_defined() -> Outcome {
    let root = q(&[1, 1, 0]);
    let d = SphericalFanoData::new(SphericalInput {
        n_rank: 1,
        t_rank: 3,
        pi: QMat::from_rows(vec![q(&[1, 1, 0])], 3).map_err(|e| e.to_string())?,
        valuation_cone_generators: vec![q(&[1])],
        colored_fan_edges: vec![ColoredEdge::new(q(&[1]), int(1))],
        moment_polytope: Polytope::from_vertices(3, vec![q(&[0, 0, 0]), q(&[1, 1, 0])])
            .map_err(|e| e.to_string())?,
        positive_roots: vec![root.clone()],
        levi_subset: vec![],
        dh: dh_density(3, &[root], &[], 2).map_err(|e| e.to_string())?,
        v_const: int(1),
    })
    .map_err(|e| e.to_string())?;
    let kernel = d.pi().kernel();
    ensure!(kernel.len() == 2, "kernel dimension {}", kernel.len());
    let base = d.df_edge(&q(&[1])).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let w0 = q(&[1, 0, 0]);
    for _ in 0..1000 {
        let mut w = w0.clone();
        for k in &kernel {
            let c = Rat::new(
                BigInt::from(rng.gen_range(-10_000i64..=10_000)),
                BigInt::from(rng.gen_range(1i64..=997)),
            );
            w = w.add_scaled(&c, k);
        }
        ensure!(d.pi().mul_vec(&w) == q(&[1]), "{w} is not a preimage");
        let df = d.df_at_preimage(&w);
        ensure!(df == base, "DF at {w} is {df}, expected {base}");
    }
    Ok(format!(
        "DF = {base} at 1000 random preimages under a 1x3 projection"
    ))
}

fn c9_verdict_semantics() -> Outcome {
    let bl1 = report("bl1-p2");
    ensure!(bl1.verdict == "k-unstable", "Bl_1 P^2: {}", bl1.verdict);
    let p2 = report("p2");
    ensure!(
        p2.verdict == "k-semistable" && p2.aut_dim == Some(2),
        "P^2: {} aut_dim {:?}",
        p2.verdict,
        p2.aut_dim
    );
    let x = ToricFano::from_ints(&[&[1, 0], &[0, 1], &[-1, -1]]).map_err(|e| e.to_string())?;
    ensure!(!verdict_toric(&x).uniform, "P^2 flagged uniform");
    let syn = report("synthetic-uniform");
    ensure!(
        syn.verdict == "uniformly-k-stable" && syn.delta == "2",
        "synthetic instance: {} with delta {}",
        syn.verdict,
        syn.delta
    );
    Ok("Bl_1 P^2 unstable; P^2 semistable, not uniform, aut_dim 2; synthetic cone uniform with delta_G = 2".into())
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn multi_indices(dim: usize, max_deg: u32) -> Vec<Vec<u32>> {
    if dim == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max_deg {
        for mut rest in multi_indices(dim - 1, max_deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn c10_integration_kernel() -> Outcome {
    let mut count = 0;
    for d in 1..=4usize {
        let mut simplex = vec![QVec::zeros(d)];
        simplex.extend((0..d).map(|i| QVec::unit(d, i)));
        for a in multi_indices(d, 6) {
            let deg: u32 = a.iter().sum();
            let closed = Rat::new(
                a.iter().map(|&k| factorial(k)).product(),
                factorial(d as u32 + deg),
            );
            let got = simplex_monomial_integral(&simplex, &a).map_err(|e| e.to_string())?;
            ensure!(got == closed, "dim {d}, exponents {a:?}: {got} vs {closed}");
            count += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0xfeed);
    for i in 0..100 {
        let d = 1 + i % 3;
        let npts = rng.gen_range(1..=7);
        let pts: Vec<QVec> = (0..npts)
            .map(|_| {
                QVec::new(
                    (0..d)
                        .map(|_| {
                            Rat::new(
                                BigInt::from(rng.gen_range(-6i64..=6)),
                                BigInt::from(rng.gen_range(1i64..=4)),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        let p = Polytope::from_vertices(d, pts).map_err(|e| e.to_string())?;
        let f = PolyDensity::linear(&QVec::new(vec![int(1); d]), int(3)).pow(3);
        let a = integrate_over(&p, &f, Apex::LexMin).map_err(|e| e.to_string())?;
        let b = integrate_over(&p, &f, Apex::LexMax).map_err(|e| e.to_string())?;
        ensure!(a == b, "polytope {i}: {a} vs {b}");
    }
    Ok(format!("{count} monomial integrals match the closed form; both triangulations agree on 100 random polytopes"))
}

fn c11_infinite_delta() -> Outcome {
    let r = report("empty-fan");
    ensure!(
        r.delta == "inf"
            && r.alpha.as_deref() == Some("inf")
            && r.verdict == "vacuous"
            && r.beta == "1",
        "delta {}, alpha {:?}, verdict {}",
        r.delta,
        r.alpha,
        r.verdict
    );
    Ok("empty colored fan reports delta = alpha = inf, verdict vacuous".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cyclic quotients of P^1", c1_cyclic_quotients),
        ("log pairs (m,m) on P^1", c2_log_pairs),
        ("ramification-formula coherence", c3_ramification_coherence),
        ("toric formula", c4_toric_formula),
        ("inequality chain", c5_inequalities),
        ("beta = min(1, delta)", c6_beta_bridge),
        ("toric vs spherical delta", c7_cross_pipeline),
        ("DF independent of preimage", c8_df_well_defined),
        ("verdict semantics", c9_verdict_semantics),
        ("integration kernel", c10_integration_kernel),
        ("infinite delta", c11_infinite_delta),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
