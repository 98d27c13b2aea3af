//! Job runner behind the `intnum` binary: parses a JSON input document, runs
//! one subcommand and renders the JSON report.

use std::fmt;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use intnum_core::algebra::{
    build_algebra_from_form, build_algebra_from_polynomial, check_equivalence, mixed_volume_tensor,
    self_intersection, volume_polynomial, GradedPDAlgebra,
};
use intnum_core::bkk::{bkk_number, newton_polytope, oracle_roots, OracleConfig};
use intnum_core::flag::{count_lattice_points, gt_hrep, weyl_dim, DegreeReport};
use intnum_core::json::{
    algebra_json, form_json, homogeneous_json, hrep_json, rational_json, vrep_json, FormDoc,
    HomogeneousDoc, LaurentDoc, ParsedPolytope, PolytopeDoc, RationalDoc, SystemDoc, WeightDoc,
};
use intnum_core::rational::factorial;
use intnum_core::{
    convex_hull, hrep_to_vrep, minkowski_sum, mixed_volume, volume, vrep_to_hrep, Error, Rational,
    RationalVector, VPolytope,
};

pub const TOOL: &str = "intnum";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Subcommand {
    Volume,
    MixedVolume,
    Minkowski,
    Hull,
    Convert,
    Newton,
    Bkk,
    VerifyBkk,
    Volpoly,
    Algebra,
    Equiv,
    Gt,
    FlagDegree,
    WeylDim,
}

impl Subcommand {
    pub const ALL: [Subcommand; 14] = [
        Subcommand::Volume,
        Subcommand::MixedVolume,
        Subcommand::Minkowski,
        Subcommand::Hull,
        Subcommand::Convert,
        Subcommand::Newton,
        Subcommand::Bkk,
        Subcommand::VerifyBkk,
        Subcommand::Volpoly,
        Subcommand::Algebra,
        Subcommand::Equiv,
        Subcommand::Gt,
        Subcommand::FlagDegree,
        Subcommand::WeylDim,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subcommand::Volume => "volume",
            Subcommand::MixedVolume => "mixed-volume",
            Subcommand::Minkowski => "minkowski",
            Subcommand::Hull => "hull",
            Subcommand::Convert => "convert",
            Subcommand::Newton => "newton",
            Subcommand::Bkk => "bkk",
            Subcommand::VerifyBkk => "verify-bkk",
            Subcommand::Volpoly => "volpoly",
            Subcommand::Algebra => "algebra",
            Subcommand::Equiv => "equiv",
            Subcommand::Gt => "gt",
            Subcommand::FlagDegree => "flag-degree",
            Subcommand::WeylDim => "weyl-dim",
        }
    }

    /// Subcommands whose output depends on the seed.
    pub fn is_randomized(self) -> bool {
        matches!(self, Subcommand::VerifyBkk)
    }
}

impl fmt::Display for Subcommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct JobRequest {
    pub command: Subcommand,
    /// The input document text.
    pub input: String,
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: i64,
    pub pretty: bool,
}

impl JobRequest {
    pub fn new(command: Subcommand, input: impl Into<String>) -> Self {
        let cfg = OracleConfig::default();
        JobRequest {
            command,
            input: input.into(),
            seed: cfg.seed,
            trials: cfg.trials,
            coeff_bound: cfg.coeff_bound,
            pretty: false,
        }
    }

    fn oracle_config(&self) -> OracleConfig {
        OracleConfig {
            seed: self.seed,
            trials: self.trials,
            coeff_bound: self.coeff_bound,
            ..OracleConfig::default()
        }
    }
}

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const MALFORMED: i32 = 2;
    pub const DEGENERATE: i32 = 3;
    pub const RETRIES: i32 = 4;
}

#[derive(Debug)]
pub enum JobError {
    Parse(String),
    Core(Error),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Parse(_) => exit::MALFORMED,
            JobError::Core(e) => match e {
                Error::InvalidInput(_) | Error::NotDominant(_) | Error::ShapeMismatch(_) => {
                    exit::MALFORMED
                }
                Error::ZeroForm
                | Error::UnboundedPolytope
                | Error::NotAmple(_)
                | Error::NonIntegerDegree(_) => exit::DEGENERATE,
                Error::RetriesExhausted { .. } => exit::RETRIES,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            JobError::Parse(_) => "MalformedInput",
            JobError::Core(e) => match e {
                Error::InvalidInput(_) => "InvalidInput",
                Error::UnboundedPolytope => "UnboundedPolytope",
                Error::ZeroForm => "ZeroForm",
                Error::NotDominant(_) => "NotDominant",
                Error::NotAmple(_) => "NotAmple",
                Error::NonIntegerDegree(_) => "NonIntegerDegree",
                Error::RetriesExhausted { .. } => "RetriesExhausted",
                Error::ShapeMismatch(_) => "ShapeMismatch",
            },
        }
    }
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JobError::Parse(m) => write!(f, "malformed input: {m}"),
            JobError::Core(e) => e.fmt(f),
        }
    }
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        JobError::Core(e)
    }
}

impl From<serde_json::Error> for JobError {
    fn from(e: serde_json::Error) -> Self {
        JobError::Parse(e.to_string())
    }
}

type JobResult<T> = Result<T, JobError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOutcome {
    pub exit_code: i32,
    /// Rendered report, newline terminated.
    pub report: String,
    /// One-line summary of the failure, if any.
    pub error: Option<String>,
}

/// Runs one job. Failures still produce a report carrying the error kind.
pub fn run(req: &JobRequest) -> JobOutcome {
    let echoed: Value = serde_json::from_str(&req.input).unwrap_or(Value::Null);
    let mut envelope = json!({
        "tool": TOOL,
        "version": intnum_core::VERSION,
        "command": req.command.name(),
        "input": echoed,
    });
    if req.command.is_randomized() {
        envelope["seed"] = json!(req.seed);
        envelope["trials"] = json!(req.trials);
        envelope["coeff_bound"] = json!(req.coeff_bound);
    }
    let (exit_code, error) = match dispatch(req) {
        Ok(result) => {
            envelope["status"] = json!("ok");
            envelope["result"] = result;
            (exit::SUCCESS, None)
        }
        Err(e) => {
            envelope["status"] = json!("error");
            envelope["error"] = json!({"kind": e.kind(), "message": e.to_string()});
            (e.exit_code(), Some(e.to_string()))
        }
    };
    let mut report = if req.pretty {
        serde_json::to_string_pretty(&envelope)
    } else {
        serde_json::to_string(&envelope)
    }
    .expect("JSON values always serialize");
    report.push('\n');
    JobOutcome {
        exit_code,
        report,
        error,
    }
}

fn parse<T: for<'de> Deserialize<'de>>(input: &str) -> JobResult<T> {
    Ok(serde_json::from_str(input)?)
}

/// Integers go out as JSON numbers when they fit in 64 bits, else as strings.
fn integer_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn polytope_list(docs: &[PolytopeDoc]) -> JobResult<Vec<VPolytope>> {
    if docs.is_empty() {
        return Err(JobError::Parse("expected at least one polytope".into()));
    }
    let ps = docs
        .iter()
        .map(|d| d.parse_vrep())
        .collect::<Result<Vec<_>, _>>()?;
    let n = ps[0].ambient_dim();
    if ps.iter().any(|p| p.ambient_dim() != n) {
        return Err(Error::ShapeMismatch("polytopes live in different dimensions".into()).into());
    }
    Ok(ps)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopesDoc {
    polytopes: Vec<PolytopeDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    dim: usize,
    points: Vec<Vec<RationalDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorsDoc {
    generators: Vec<PolytopeDoc>,
}

#[derive(Deserialize, Clone, Copy, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum ConstructionChoice {
    #[default]
    Polynomial,
    Form,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlgebraDoc {
    Generators {
        generators: Vec<PolytopeDoc>,
        #[serde(default)]
        construction: ConstructionChoice,
    },
    Polynomial {
        polynomial: HomogeneousDoc,
    },
    Form {
        form: FormDoc,
    },
}

fn dispatch(req: &JobRequest) -> JobResult<Value> {
    let input = req.input.as_str();
    match req.command {
        Subcommand::Volume => {
            let p = parse::<PolytopeDoc>(input)?.parse_vrep()?;
            let v = volume(&p);
            let normalized = &v * Rational::from_integer(factorial(p.ambient_dim()));
            Ok(json!({
                "volume": rational_json(&v),
                "normalized_volume": rational_json(&normalized),
                "affine_dim": p.affine_dim(),
            }))
        }
        Subcommand::MixedVolume => {
            let ps = polytope_list(&parse::<PolytopesDoc>(input)?.polytopes)?;
            let mv = mixed_volume(&ps)?;
            let normalized = &mv * Rational::from_integer(factorial(ps.len()));
            Ok(json!({
                "mixed_volume": rational_json(&mv),
                "normalized_mixed_volume": rational_json(&normalized),
            }))
        }
        Subcommand::Minkowski => {
            let ps = polytope_list(&parse::<PolytopesDoc>(input)?.polytopes)?;
            let mut sum = ps[0].clone();
            for p in &ps[1..] {
                sum = minkowski_sum(&sum, p)?;
            }
            Ok(json!({"sum": vrep_json(&sum)}))
        }
        Subcommand::Hull => {
            let doc = parse::<PointsDoc>(input)?;
            let pts = doc
                .points
                .iter()
                .map(|p| {
                    if p.len() != doc.dim {
                        return Err(JobError::Parse(format!(
                            "expected {} coordinates, got {}",
                            doc.dim,
                            p.len()
                        )));
                    }
                    Ok(RationalVector::new(
                        p.iter().map(RationalDoc::parse).collect::<Result<_, _>>()?,
                    )?)
                })
                .collect::<JobResult<Vec<_>>>()?;
            let hull = convex_hull(&pts)?;
            Ok(json!({"hull": vrep_json(&hull), "affine_dim": hull.affine_dim()}))
        }
        Subcommand::Convert => match parse::<PolytopeDoc>(input)?.parse()? {
            ParsedPolytope::V(v) => Ok(json!({"hrep": hrep_json(&vrep_to_hrep(&v)?)})),
            ParsedPolytope::H(h) => Ok(json!({"vrep": vrep_json(&hrep_to_vrep(&h))})),
        },
        Subcommand::Newton => {
            let f = parse::<LaurentDoc>(input)?.parse()?;
            let p = newton_polytope(&f)?;
            Ok(json!({"newton_polytope": vrep_json(&p), "affine_dim": p.affine_dim()}))
        }
        Subcommand::Bkk => {
            let sys = parse::<SystemDoc>(input)?.parse()?;
            Ok(json!({"bkk_number": bkk_number(&sys)?}))
        }
        Subcommand::VerifyBkk => {
            let sys = parse::<SystemDoc>(input)?.parse()?;
            let b = bkk_number(&sys)?;
            let roots = oracle_roots(&sys, &req.oracle_config())?;
            Ok(json!({
                "bkk_number": b,
                "oracle_roots": roots,
                "match": b == roots as u64,
            }))
        }
        Subcommand::Volpoly => {
            let gens = polytope_list(&parse::<GeneratorsDoc>(input)?.generators)?;
            let f = mixed_volume_tensor(&gens)?;
            Ok(json!({
                "form": form_json(&f),
                "volume_polynomial": homogeneous_json(&volume_polynomial(&f)),
            }))
        }
        Subcommand::Algebra => {
            let alg = match parse::<AlgebraDoc>(input)? {
                AlgebraDoc::Generators {
                    generators,
                    construction,
                } => {
                    let f = mixed_volume_tensor(&polytope_list(&generators)?)?;
                    match construction {
                        ConstructionChoice::Polynomial => {
                            build_algebra_from_polynomial(&volume_polynomial(&f))?
                        }
                        ConstructionChoice::Form => build_algebra_from_form(&f)?,
                    }
                }
                AlgebraDoc::Polynomial { polynomial } => {
                    build_algebra_from_polynomial(&polynomial.parse()?)?
                }
                AlgebraDoc::Form { form } => build_algebra_from_form(&form.parse()?)?,
            };
            Ok(algebra_json(&alg))
        }
        Subcommand::Equiv => {
            let gens = polytope_list(&parse::<GeneratorsDoc>(input)?.generators)?;
            let f = mixed_volume_tensor(&gens)?;
            let a_p = build_algebra_from_polynomial(&volume_polynomial(&f))?;
            let a_f = build_algebra_from_form(&f)?;
            let equivalent = check_equivalence(&a_p, &a_f)?;
            let checks = self_intersections(&a_f, &gens)?;
            Ok(json!({
                "equivalent": equivalent,
                "hilbert": a_p.hilbert(),
                "self_intersections": checks,
            }))
        }
        Subcommand::Gt => {
            let w = parse::<WeightDoc>(input)?.parse()?;
            let h = gt_hrep(&w)?;
            let v = hrep_to_vrep(&h);
            Ok(json!({
                "dim": w.flag_dimension(),
                "strictly_dominant": w.is_strictly_dominant(),
                "full_dimensional": v.is_full_dimensional(),
                "hrep": hrep_json(&h),
                "vrep": vrep_json(&v),
            }))
        }
        Subcommand::FlagDegree => {
            let w = parse::<WeightDoc>(input)?.parse()?;
            let d = DegreeReport::compute(&w)?;
            Ok(json!({
                "via_gt": integer_json(&d.via_gt),
                "via_weyl": integer_json(&d.via_weyl),
                "match": d.matches(),
            }))
        }
        Subcommand::WeylDim => {
            let w = parse::<WeightDoc>(input)?.parse()?;
            let dim = weyl_dim(&w);
            let count = count_lattice_points(&w);
            Ok(json!({
                "weyl_dim": integer_json(&dim),
                "lattice_points": integer_json(&count),
                "match": dim == count,
            }))
        }
    }
}

/// `top_form(Dᵢⁿ)` against `n!·vol(Δᵢ)` for every generator.
fn self_intersections(alg: &GradedPDAlgebra, gens: &[VPolytope]) -> JobResult<Vec<Value>> {
    let n = alg.top_degree();
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            let d = alg.generator_class(i)?;
            let si = self_intersection(alg, &d)?;
            let expected = volume(g) * Rational::from_integer(factorial(n));
            Ok(json!({
                "generator": i,
                "self_intersection": rational_json(&si),
                "normalized_volume": rational_json(&expected),
                "match": si == expected,
            }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(cmd: Subcommand, input: &str) -> (i32, Value) {
        let out = run(&JobRequest::new(cmd, input));
        (out.exit_code, serde_json::from_str(&out.report).unwrap())
    }

    #[test]
    fn bkk_dense_quadratics() {
        let q = r#"{"dim":2,"points":[[0,0],[1,0],[0,1],[2,0],[1,1],[0,2]]}"#;
        let (code, v) = result(Subcommand::Bkk, &format!(r#"{{"system":[{q},{q}]}}"#));
        assert_eq!(code, 0);
        assert_eq!(v["result"]["bkk_number"], json!(4));
        assert_eq!(v["input"]["system"][0]["dim"], json!(2));
    }

    #[test]
    fn flag_degree_report() {
        let (code, v) = result(
            Subcommand::FlagDegree,
            r#"{"group":"GL","m":3,"lambda":[2,1,0]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(
            v["result"],
            json!({"via_gt": 6, "via_weyl": 6, "match": true})
        );
        let (code, v) = result(Subcommand::FlagDegree, r#"{"m":3,"lambda":[1,1,0]}"#);
        assert_eq!(code, exit::DEGENERATE);
        assert_eq!(v["error"]["kind"], json!("NotAmple"));
        let (code, _) = result(Subcommand::FlagDegree, r#"{"m":3,"lambda":[0,1,0]}"#);
        assert_eq!(code, exit::MALFORMED);
    }

    #[test]
    fn algebra_axis_segments() {
        let input = r#"{"generators":[{"dim":2,"vertices":[["0","0"],["1","0"]]},{"dim":2,"vertices":[["0","0"],["0","1"]]}]}"#;
        let (code, v) = result(Subcommand::Algebra, input);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["hilbert"], json!([1, 2, 1]));
    }

    #[test]
    fn error_kinds_map_to_exit_codes() {
        let cases = [
            (Error::InvalidInput("x".into()), exit::MALFORMED),
            (Error::NotDominant(vec![0, 1]), exit::MALFORMED),
            (Error::ShapeMismatch("x".into()), exit::MALFORMED),
            (Error::ZeroForm, exit::DEGENERATE),
            (Error::UnboundedPolytope, exit::DEGENERATE),
            (Error::NotAmple(vec![1, 1]), exit::DEGENERATE),
            (Error::RetriesExhausted { attempts: 16 }, exit::RETRIES),
        ];
        for (e, code) in cases {
            assert_eq!(JobError::from(e).exit_code(), code);
        }
        assert_eq!(JobError::Parse("x".into()).exit_code(), exit::MALFORMED);
    }

    #[test]
    fn error_codes() {
        assert_eq!(result(Subcommand::Volume, "not json").0, exit::MALFORMED);
        assert_eq!(
            result(
                Subcommand::Convert,
                r#"{"dim":1,"inequalities":[{"normal":["1"],"rhs":"1"}]}"#
            )
            .0,
            exit::DEGENERATE
        );
        assert_eq!(
            result(
                Subcommand::Algebra,
                r#"{"form":{"generators":2,"degree":2,"values":[]}}"#
            )
            .0,
            exit::DEGENERATE
        );
        assert_eq!(
            result(
                Subcommand::Newton,
                r#"{"dim":1,"terms":[{"exponent":[2],"coefficient":"0"}]}"#
            )
            .0,
            exit::MALFORMED
        );
    }
}
