use std::io::Write;

use entcat::{
    analyze, augment, construct_states, construct_with_mu, default_grid, first_majorization_violation,
    is_valid_catalyst, locc_possible, lorenz_points, lower_bound, oracle_valid_catalyst, partial_sums, sweep,
    upper_bound, CatalystSpectrum, ConstructionResult, EpsilonTriple, Error, ExtendedRational, FeasibilityReport,
    InfeasibleReason, Rational, Spectrum4, Verdict,
};
use serde::Serialize;

use crate::args::{ConstructArgs, LorenzArgs, PairArgs, SweepArgs, ValidateArgs};
use crate::request::{pick, rational, rationals, spectrum, CliError, CliResult, RequestDocument};

/// Fractional digits in decimal approximations.
const DIGITS: usize = 12;
const DEFAULT_DENOMINATOR: u32 = 1000;

fn approx(r: &Rational) -> String {
    r.to_decimal(DIGITS).text
}

fn approx_ext(r: &ExtendedRational) -> String {
    match r {
        ExtendedRational::Finite(r) => approx(r),
        ExtendedRational::PosInfinity => "inf".into(),
    }
}

fn approx_all(values: &[Rational]) -> Vec<String> {
    values.iter().map(approx).collect()
}

fn approx_pair((a, b): &(Rational, Rational)) -> [String; 2] {
    [approx(a), approx(b)]
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("cannot write output: {e}"))
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn pair(args: PairArgs, doc: &mut RequestDocument) -> CliResult<(Spectrum4, Spectrum4)> {
    let source = pick(args.source, doc.source.take(), "source")?;
    let target = pick(args.target, doc.target.take(), "target")?;
    Ok((spectrum(&source, "source")?, spectrum(&target, "target")?))
}

#[derive(Serialize)]
struct LoccReport<'a> {
    source: &'a Spectrum4,
    target: &'a Spectrum4,
    possible: bool,
    partial_sums_source: &'a [Rational],
    partial_sums_target: &'a [Rational],
    first_violated_index: Option<usize>,
    approximate: LoccApprox,
}

#[derive(Serialize)]
struct LoccApprox {
    partial_sums_source: Vec<String>,
    partial_sums_target: Vec<String>,
}

pub fn check_locc(args: PairArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let (source, target) = pair(args, &mut doc)?;
    let sums_source = partial_sums(source.coefficients())?;
    let sums_target = partial_sums(target.coefficients())?;
    let violated = first_majorization_violation(source.coefficients(), target.coefficients())?;
    let possible = locc_possible(&source, &target);
    if possible != violated.is_none() {
        return Err(CliError::Inconsistent("majorization verdicts differ".into()));
    }
    emit_json(
        out,
        &LoccReport {
            source: &source,
            target: &target,
            possible,
            partial_sums_source: sums_source.sums(),
            partial_sums_target: sums_target.sums(),
            first_violated_index: violated,
            approximate: LoccApprox {
                partial_sums_source: approx_all(sums_source.sums()),
                partial_sums_target: approx_all(sums_target.sums()),
            },
        },
    )
}

#[derive(Serialize)]
struct AnalysisReport<'a> {
    source: &'a Spectrum4,
    target: &'a Spectrum4,
    verdict: Verdict,
    epsilon: Option<&'a EpsilonTriple>,
    m: Option<&'a ExtendedRational>,
    #[serde(rename = "M")]
    big_m: Option<&'a Rational>,
    r_interval: Option<&'a (Rational, Rational)>,
    p_interval: Option<&'a (Rational, Rational)>,
    reason: Option<&'a InfeasibleReason>,
    approximate: AnalysisApprox,
}

#[derive(Serialize)]
struct AnalysisApprox {
    m: Option<String>,
    #[serde(rename = "M")]
    big_m: Option<String>,
    r_interval: Option<[String; 2]>,
    p_interval: Option<[String; 2]>,
}

impl<'a> AnalysisReport<'a> {
    fn new(source: &'a Spectrum4, target: &'a Spectrum4, report: &'a FeasibilityReport) -> Self {
        AnalysisReport {
            source,
            target,
            verdict: report.verdict(),
            epsilon: report.epsilon(),
            m: report.lower(),
            big_m: report.upper(),
            r_interval: report.ratio_interval(),
            p_interval: report.weight_interval(),
            reason: report.reason(),
            approximate: AnalysisApprox {
                m: report.lower().map(approx_ext),
                big_m: report.upper().map(approx),
                r_interval: report.ratio_interval().map(approx_pair),
                p_interval: report.weight_interval().map(approx_pair),
            },
        }
    }
}

pub fn analyze_pair(args: PairArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let (source, target) = pair(args, &mut doc)?;
    let report = analyze(&source, &target);
    emit_json(out, &AnalysisReport::new(&source, &target, &report))
}

#[derive(Serialize)]
struct ValidationReport<'a> {
    source: &'a Spectrum4,
    target: &'a Spectrum4,
    catalyst: &'a CatalystSpectrum,
    theorem: TheoremVerdict,
    oracle: OracleVerdict,
    agree: bool,
}

#[derive(Serialize)]
struct TheoremVerdict {
    applicable: bool,
    valid: Option<bool>,
    /// Why the theorem does not apply, when it does not.
    note: Option<&'static str>,
}

#[derive(Serialize)]
struct OracleVerdict {
    valid: bool,
    beta_source: Vec<Rational>,
    beta_target: Vec<Rational>,
}

pub fn validate(args: ValidateArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let (source, target) = pair(args.pair, &mut doc)?;
    let catalyst = match (args.catalyst, args.p) {
        (Some(values), None) => CatalystSpectrum::new(rationals(&values, "catalyst")?)?,
        (None, Some(p)) => CatalystSpectrum::two_qubit(&rational(&p, "p")?)?,
        (None, None) => match (doc.catalyst.take(), doc.p.take()) {
            (Some(values), None) => CatalystSpectrum::new(rationals(&values, "catalyst")?)?,
            (None, Some(p)) => CatalystSpectrum::two_qubit(&rational(&p, "p")?)?,
            (Some(_), Some(_)) => return Err(CliError::Input("give either catalyst or p, not both".into())),
            (None, None) => return Err(CliError::Input("missing catalyst (or p)".into())),
        },
        (Some(_), Some(_)) => unreachable!("clap rejects --catalyst with --p"),
    };

    let oracle = oracle_valid_catalyst(&source, &target, &catalyst);
    let theorem = if catalyst.len() != 2 {
        TheoremVerdict {
            applicable: false,
            valid: None,
            note: Some("theorem covers two-component catalysts only"),
        }
    } else {
        match is_valid_catalyst(&source, &target, &catalyst.components()[0]) {
            Ok(valid) => TheoremVerdict {
                applicable: true,
                valid: Some(valid),
                note: None,
            },
            Err(Error::LoccAlreadyPossible) => TheoremVerdict {
                applicable: false,
                valid: None,
                note: Some("transformation is already possible by LOCC"),
            },
            Err(e) => return Err(e.into()),
        }
    };
    let agree = theorem.valid.is_none_or(|valid| valid == oracle);

    emit_json(
        out,
        &ValidationReport {
            source: &source,
            target: &target,
            catalyst: &catalyst,
            oracle: OracleVerdict {
                valid: oracle,
                beta_source: augment(&source, &catalyst).into_vec(),
                beta_target: augment(&target, &catalyst).into_vec(),
            },
            theorem,
            agree,
        },
    )?;
    if agree {
        Ok(())
    } else {
        Err(CliError::Inconsistent(
            "theorem and oracle disagree on this catalyst".into(),
        ))
    }
}

/// Writes the CSV, then cross-checks every row against the theorem.
pub fn sweep_grid(args: SweepArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let (source, target) = pair(args.pair, &mut doc)?;
    let denominator = args.denominator.or(doc.denominator).unwrap_or(DEFAULT_DENOMINATOR);
    if denominator == 0 {
        return Err(CliError::Input("denominator must be positive".into()));
    }
    let report = analyze(&source, &target);
    let grid = default_grid(denominator, Some(&report));
    let rows = sweep(&source, &target, &grid)?;

    let mut writer = csv_writer(out);
    writer.write_record(["p", "p_decimal", "valid"]).map_err(io_error)?;
    for (p, valid) in &rows {
        writer
            .write_record([p.to_string(), approx(p), u8::from(*valid).to_string()])
            .map_err(io_error)?;
    }
    writer.flush().map_err(io_error)?;

    for (p, valid) in &rows {
        let expected = match report.admits(p) {
            Ok(admitted) => admitted,
            Err(Error::LoccAlreadyPossible) => true,
            Err(e) => return Err(e.into()),
        };
        if expected != *valid {
            return Err(CliError::Inconsistent(format!(
                "at p = {p} the theorem says {expected}, the oracle says {valid}"
            )));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ConstructionReport<'a> {
    #[serde(flatten)]
    result: &'a ConstructionResult,
    verification: Verification,
    approximate: ConstructionApprox,
}

#[derive(Serialize)]
struct Verification {
    m: ExtendedRational,
    #[serde(rename = "M")]
    big_m: Rational,
    matches: bool,
}

#[derive(Serialize)]
struct ConstructionApprox {
    source: Vec<String>,
    target: Vec<String>,
    mu: String,
    a: String,
}

pub fn construct(args: ConstructArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let m0 = rational(&pick(args.m0, doc.m0.take(), "m0")?, "m0")?;
    let big_m0 = rational(&pick(args.big_m0, doc.big_m0.take(), "M0")?, "M0")?;
    let result = match args.mu.or(doc.mu.take()) {
        Some(mu) => construct_with_mu(&m0, &big_m0, &rational(&mu, "mu")?)?,
        None => construct_states(&m0, &big_m0)?,
    };

    let m = lower_bound(&result.source, &result.epsilon)?;
    let big_m = upper_bound(&result.source, &result.epsilon)?;
    let matches = m == ExtendedRational::Finite(m0) && big_m == big_m0;
    emit_json(
        out,
        &ConstructionReport {
            verification: Verification { m, big_m, matches },
            approximate: ConstructionApprox {
                source: approx_all(result.source.coefficients()),
                target: approx_all(result.target.coefficients()),
                mu: approx(&result.mu),
                a: approx(&result.a),
            },
            result: &result,
        },
    )?;
    if matches {
        Ok(())
    } else {
        Err(CliError::Inconsistent("recomputed bounds differ from m0, M0".into()))
    }
}

/// One CSV block per spectrum, blocks separated by an empty line.
pub fn lorenz(args: LorenzArgs, mut doc: RequestDocument, out: &mut impl Write) -> CliResult<()> {
    let spectra: Vec<Vec<String>> = if args.spectra.is_empty() {
        doc.spectra.take().unwrap_or_default()
    } else {
        args.spectra
            .iter()
            .map(|s| s.split(',').map(str::to_string).collect())
            .collect()
    };
    if spectra.is_empty() {
        return Err(CliError::Input("missing spectrum".into()));
    }
    let curves = spectra
        .iter()
        .enumerate()
        .map(|(i, values)| {
            let name = format!("spectrum {}", i + 1);
            lorenz_points(&rationals(values, &name)?).map_err(|e| CliError::Input(format!("{name}: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;

    for (i, points) in curves.iter().enumerate() {
        if i > 0 {
            writeln!(out).map_err(io_error)?;
        }
        let mut writer = csv_writer(&mut *out);
        writer
            .write_record(["k_over_n", "lambda", "lambda_decimal"])
            .map_err(io_error)?;
        for (x, y) in points {
            writer
                .write_record([x.to_string(), y.to_string(), approx(y)])
                .map_err(io_error)?;
        }
        writer.flush().map_err(io_error)?;
    }
    Ok(())
}
