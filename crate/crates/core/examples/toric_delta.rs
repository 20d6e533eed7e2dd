// Stability thresholds of toric Fano varieties from their rays.

use kdelta::toric::{ray_scores, verdict_toric, ToricFano};

fn run_example() -> kdelta::Result<String> {
    let mut out = String::new();
    let fans: [(&str, &[&[i64]]); 3] = [
        ("P^2", &[&[1, 0], &[0, 1], &[-1, -1]]),
        ("Bl_1 P^2", &[&[1, 0], &[0, 1], &[1, 1], &[-1, -1]]),
        (
            "Bl_2 P^2",
            &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1]],
        ),
    ];
    for (name, rays) in fans {
        let x = ToricFano::from_ints(rays)?;
        let v = verdict_toric(&x);
        out += &format!(
            "{name}: barycenter {}, delta {}, alpha {}, beta {}, {} (witness {})\n",
            x.barycenter(),
            v.delta,
            v.alpha,
            v.beta,
            v.verdict,
            v.witness
        );
        for s in ray_scores(&x) {
            out += &format!("  ray {}: S = {}, T = {}\n", s.ray, s.s, s.t);
        }
    }
    Ok(out)
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
