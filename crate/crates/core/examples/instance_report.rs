// Parse an instance document and print its report.

use kdelta::cli::{run_instance, InstanceFile};

const DOC: &str = r#"{
  "kind": "spherical",
  "n_rank": 2,
  "t_rank": 2,
  "pi": [[1, 0], [0, 1]],
  "valuation_cone_generators": [[-1, 0], [0, -1]],
  "colored_fan_edges": [{"gen": [-1, 0], "a": 1}, {"gen": [0, -1], "a": "1"}],
  "moment_polytope": {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
  "dh": {"terms": [{"exponents": [0, 0], "coeff": 1}]},
  "V": 1
}"#;

fn run_example() -> kdelta::Result<String> {
    let file = InstanceFile::parse(DOC)?;
    Ok(run_instance("synthetic-uniform", &file)?.to_json() + "\n")
}

fn main() -> kdelta::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
