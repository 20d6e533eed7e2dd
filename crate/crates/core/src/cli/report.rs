use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{fmt_rat, Rat};
use crate::logcurve::{
    alpha_log_p1, delta_log_p1, group_invariants, quotient_signature, BranchSignature, GroupFamily,
};
use crate::spherical::{toric_embed, SphericalFanoData};
use crate::toric::{verdict_toric, ToricFano};
use crate::verdict::{beta_from_delta, ExtRat, Scope, Verdict};

use super::instance::Instance;

/// The JSON document printed by `kdelta run`.
///
/// Rationals are canonical `"p/q"` strings; an infinite threshold is `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub instance_id: String,
    pub kind: String,
    pub alpha: Option<String>,
    pub delta: String,
    pub beta: String,
    pub verdict: String,
    pub scope: String,
    pub witness: String,
    pub aut_dim: Option<usize>,
    pub diagnostics: Vec<String>,
}

impl StabilityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn evaluate(id: &str, instance: &Instance) -> Result<StabilityReport> {
    let mut report = match instance {
        Instance::Toric(x) => toric_report(x)?,
        Instance::Spherical(d) => spherical_report(d)?,
        Instance::P1Group(g) => group_report(*g)?,
        Instance::P1Logpair(s) => logpair_report(s),
    };
    report.instance_id = id.to_string();
    report.kind = instance.kind().as_str().to_string();
    Ok(report)
}

fn blank(verdict: Verdict, scope: Scope, delta: String, beta: &Rat) -> StabilityReport {
    StabilityReport {
        instance_id: String::new(),
        kind: String::new(),
        alpha: None,
        delta,
        beta: fmt_rat(beta),
        verdict: verdict.as_str().into(),
        scope: scope.as_str().into(),
        witness: String::new(),
        aut_dim: None,
        diagnostics: Vec::new(),
    }
}

fn toric_report(x: &ToricFano) -> Result<StabilityReport> {
    let v = verdict_toric(x);
    let mirror = toric_embed(x)?.delta_spherical()?.value;
    if mirror != ExtRat::Finite(v.delta.clone()) {
        return Err(Error::InconsistentData(format!(
            "toric delta {} differs from the spherical computation {mirror}",
            v.delta
        )));
    }
    let mut r = blank(v.verdict, Scope::Absolute, fmt_rat(&v.delta), &v.beta);
    r.alpha = Some(fmt_rat(&v.alpha));
    r.witness = format!("toric divisor of ray {}", v.witness);
    r.aut_dim = Some(x.rank());
    r.diagnostics.push(format!(
        "barycenter of the anticanonical polytope: {}",
        x.barycenter()
    ));
    r.diagnostics
        .push(format!("spherical computation agrees: delta = {mirror}"));
    r.diagnostics.extend(x.advisories());
    Ok(r)
}

fn spherical_report(d: &SphericalFanoData) -> Result<StabilityReport> {
    let v = d.verdict()?;
    let mut r = blank(v.verdict, Scope::GEquivariant, v.delta.to_string(), &v.beta);
    r.alpha = v.delta.is_infinite().then(|| "inf".to_string());
    r.witness = match &v.witness {
        Some(e) => format!(
            "colored fan edge {} with a = {}, DF = {}",
            e.generator, e.a, e.df
        ),
        None => "no colored fan edges".into(),
    };
    r.aut_dim = Some(v.aut_dim);
    r.diagnostics.push(format!("2rho_Q = {}", d.two_rho_q()));
    r.diagnostics.push(format!(
        "DH barycenter = {} (mass {})",
        d.dh_barycenter().point,
        d.dh_barycenter().mass
    ));
    if let Ok(df) = d.df_functional() {
        r.diagnostics.push(format!("DF functional = {df}"));
    }
    r.diagnostics
        .push(format!("polystable criterion: {}", v.polystable));
    r.diagnostics
        .push(format!("uniform criterion: {}", v.uniform));
    match d.horospherical_bound_check() {
        Ok(eq) => r
            .diagnostics
            .push(format!("horospherical: delta_G <= 1 holds, equality: {eq}")),
        Err(Error::NotHorospherical) | Err(Error::InvalidData(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn group_report(g: GroupFamily) -> Result<StabilityReport> {
    let inv = group_invariants(g)?;
    let sig = quotient_signature(g)?;
    let delta = ExtRat::Finite(inv.delta.clone());
    let mut r = blank(
        Verdict::from_delta(&delta),
        Scope::GEquivariant,
        fmt_rat(&inv.delta),
        &beta_from_delta(&inv.delta),
    );
    r.alpha = Some(fmt_rat(&inv.alpha));
    r.witness = if inv.witness_multiplicity == 1 {
        format!("free orbit of length {}", inv.min_orbit_length)
    } else {
        format!(
            "orbit of length {} with stabilizer of order {}",
            inv.min_orbit_length, inv.witness_multiplicity
        )
    };
    r.diagnostics.push(format!("{g} of order {}", g.order()));
    r.diagnostics.push(format!(
        "quotient signature {sig}, log degree {}",
        sig.log_degree()
    ));
    Ok(r)
}

fn logpair_report(s: &BranchSignature) -> StabilityReport {
    let delta = delta_log_p1(s);
    let mut r = blank(
        Verdict::from_delta(&ExtRat::Finite(delta.clone())),
        Scope::Absolute,
        fmt_rat(&delta),
        &beta_from_delta(&delta),
    );
    r.alpha = Some(fmt_rat(&alpha_log_p1(s)));
    r.witness = match s.max_multiplicity() {
        1 => "general point".into(),
        m => format!("branch point of index {m}"),
    };
    r.diagnostics
        .push(format!("signature {s}, log degree {}", s.log_degree()));
    r
}
