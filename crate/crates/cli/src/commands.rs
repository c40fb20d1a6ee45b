//! Command bodies.

use crate::serial::DecompositionRecord;
use crate::{CheckKind, CliError, ExitCode, Outcome, OutputFormat};
use eqsurf_core::chart::{render_chart, ChartFormat};
use eqsurf_core::checks::forgetful_les_check;
use eqsurf_core::decomposition::compare_in_window;
use eqsurf_core::engine::{decompose, evaluate, surgery_increment, top_class_report};
use eqsurf_core::surface::{
    enumerate_with_witnesses, invariants, parse, underlying_cohomology, validate, AttachKind, Base,
    Descriptor, SurfaceExpr,
};
use eqsurf_core::{Decomposition, StandardModule, Window};
use eqsurf_oracle::checks::Model;
use eqsurf_oracle::dump::dump;
use eqsurf_oracle::{mesh_invariants, triangulate};
use std::fmt::Write as _;

/// Window the enumerate command checks each row's LES over.
pub fn enumerate_les_window() -> Window {
    Window::new(-4, 5, -6, 6).expect("nonempty")
}

pub fn eval(text: &str, window: &Window, format: OutputFormat) -> Result<Outcome, CliError> {
    let e = parse(text)?;
    let d = invariants(&e)?;
    let dec = evaluate(&e)?;
    let out = match Option::<ChartFormat>::from(format) {
        None => DecompositionRecord::new(text, Some(&d), &dec, window).to_json() + "\n",
        Some(ChartFormat::Svg) => render_chart(&dec, window, ChartFormat::Svg),
        Some(ChartFormat::Ascii) => {
            let mut s = String::new();
            writeln!(s, "expression: {e}").unwrap();
            writeln!(s, "descriptor: {d}").unwrap();
            writeln!(s, "summands: {dec}").unwrap();
            writeln!(s, "window: {window}").unwrap();
            s + &render_chart(&dec, window, ChartFormat::Ascii)
        }
    };
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// One line of a verify report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub check: CheckKind,
    pub status: Status,
    pub detail: String,
}

impl std::fmt::Display for CheckLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "check={} status={} detail={:?}",
            self.check.name(),
            self.status.name(),
            self.detail
        )
    }
}

/// Outcome of one surgery under the additivity rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryCase {
    pub kind: AttachKind,
    pub after: Descriptor,
    pub mismatches: usize,
}

/// Every surgery on `d` whose increment is predicted and whose result is
/// realizable, compared against the predicted sum over `window`.
pub fn surgery_additivity(d: &Descriptor, window: &Window) -> Result<Vec<SurgeryCase>, CliError> {
    let before = decompose(d)?;
    let mut out = Vec::new();
    for kind in AttachKind::ALL {
        let (Some(after), Some(inc)) = (d.attach(kind), surgery_increment(d, kind)) else {
            continue;
        };
        if !validate(&after).is_empty() {
            continue;
        }
        let predicted = before.direct_sum(&inc);
        let mismatches = compare_in_window(&decompose(&after)?, &predicted, window).len();
        out.push(SurgeryCase {
            kind,
            after,
            mismatches,
        });
    }
    Ok(out)
}

fn engine_check(kind: CheckKind, e: &SurfaceExpr, window: &Window) -> Result<CheckLine, CliError> {
    let line = |status, detail| CheckLine {
        check: kind,
        status,
        detail,
    };
    if matches!(e.root(), Base::X(_)) {
        return Ok(line(Status::Skip, "not a surface".into()));
    }
    let d = invariants(e)?;
    match kind {
        CheckKind::Surgery => {
            let cases = surgery_additivity(&d, window)?;
            if cases.is_empty() {
                return Ok(line(
                    Status::Skip,
                    "no surgery with a predicted increment".into(),
                ));
            }
            let ok = cases.iter().all(|c| c.mismatches == 0);
            let detail = cases
                .iter()
                .map(|c| format!("{}:{}", c.kind.name(), c.mismatches))
                .collect::<Vec<_>>();
            Ok(line(
                Status::of(ok),
                format!("mismatches {}", detail.join(" ")),
            ))
        }
        CheckKind::Topclass => {
            if d.free {
                return Ok(line(Status::Skip, "free action".into()));
            }
            let r = top_class_report(&d)?;
            let detail = format!(
                "{} at (2,{}) group {} below_zero {}",
                r.summand_kind, r.k_min_codim, r.top_group, r.below_zero
            );
            Ok(line(Status::of(r.predicates_hold), detail))
        }
        _ => unreachable!("mesh checks are handled by mesh_check"),
    }
}

fn mesh_check(kind: CheckKind, m: &Model, window: &Window) -> Result<CheckLine, CliError> {
    let line = |ok: bool, detail: String| CheckLine {
        check: kind,
        status: Status::of(ok),
        detail,
    };
    Ok(match kind {
        CheckKind::Quotient => {
            let r = m.quotient_lemma()?;
            let show = |g: &[eqsurf_core::FinAbGroup; 3]| {
                g.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            line(
                r.passed(),
                format!("engine {} mesh {}", show(&r.engine), show(&r.mesh)),
            )
        }
        CheckKind::Les => {
            let r = m.forgetful_les(window)?;
            let first = r
                .failures
                .first()
                .map(|f| format!(" first {} {}", f.at, f.reason))
                .unwrap_or_default();
            line(
                r.passed(),
                format!("checked {} failures {}{first}", r.checked, r.failures.len()),
            )
        }
        CheckKind::Rho => {
            let r = m.rho_localization(window)?;
            let bad = r
                .diagonals
                .iter()
                .filter(|c| !c.agrees())
                .map(|c| c.c.to_string())
                .collect::<Vec<_>>();
            line(
                r.passed(),
                format!(
                    "diagonals {} disagree [{}] unstable {:?}",
                    r.diagonals.len(),
                    bad.join(","),
                    r.unstable()
                ),
            )
        }
        CheckKind::Euler => {
            let r = m.euler();
            line(
                r.passed(),
                format!(
                    "chi {} quotient {} fixed {} beta {}",
                    r.chi, r.chi_quotient, r.chi_fixed, r.beta
                ),
            )
        }
        CheckKind::Invariants => {
            if matches!(m.expr.root(), Base::X(_)) {
                let d = mesh_invariants(&m.complex).map_err(eqsurf_oracle::CheckError::from)?;
                return Ok(CheckLine {
                    check: kind,
                    status: Status::Skip,
                    detail: format!("not a surface; mesh reads {d}"),
                });
            }
            let r = m.invariants()?;
            line(
                r.passed(),
                format!("expected {} mesh {}", r.expected, r.mesh),
            )
        }
        CheckKind::Surgery | CheckKind::Topclass => {
            unreachable!("engine checks are handled by engine_check")
        }
    })
}

/// Runs `checks` on one expression; an error inside a check is a failure.
pub fn verify_lines(
    text: &str,
    checks: &[CheckKind],
    window: &Window,
) -> Result<Vec<CheckLine>, CliError> {
    let e = parse(text)?;
    evaluate(&e)?;
    let model = if checks.iter().any(|c| c.needs_mesh()) {
        Some(Model::build(&e))
    } else {
        None
    };
    let mut out = Vec::new();
    for &kind in checks {
        let result = match (&model, kind.needs_mesh()) {
            (Some(Ok(m)), true) => mesh_check(kind, m, window),
            (Some(Err(err)), true) => Err(CliError::from(err.clone())),
            _ => engine_check(kind, &e, window),
        };
        out.push(result.unwrap_or_else(|err| CheckLine {
            check: kind,
            status: Status::Fail,
            detail: err.to_string(),
        }));
    }
    Ok(out)
}

pub fn verify(text: &str, checks: &[CheckKind], window: &Window) -> Result<Outcome, CliError> {
    let lines = verify_lines(text, checks, window)?;
    let failed = lines.iter().any(|l| l.status == Status::Fail);
    let stdout = lines.iter().map(|l| format!("{l}\n")).collect();
    let code = if failed {
        ExitCode::VERIFICATION_FAILURE
    } else {
        ExitCode::SUCCESS
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

/// One enumerated descriptor with its witness and re-validation result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumRow {
    pub descriptor: Descriptor,
    pub witness: SurfaceExpr,
    pub decomposition: Decomposition,
    /// Empty when the row re-validates.
    pub problems: Vec<String>,
}

impl std::fmt::Display for EnumRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.problems.is_empty() {
            "ok".to_string()
        } else {
            self.problems.join("; ")
        };
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.descriptor, self.witness, self.decomposition, status
        )
    }
}

fn revalidate(d: &Descriptor, witness: &SurfaceExpr, dec: &Decomposition) -> Vec<String> {
    let mut problems: Vec<String> = validate(d).into_iter().map(|v| v.0).collect();
    match invariants(witness) {
        Ok(w) if w == *d => {}
        Ok(w) => problems.push(format!("witness reads {w}")),
        Err(e) => problems.push(e.to_string()),
    }
    let surface = underlying_cohomology(d);
    let les = forgetful_les_check(dec, |n| surface.surface_degree(n), &enumerate_les_window());
    if !les.passed() {
        problems.push(format!("les fails at {} bidegrees", les.failures.len()));
    }
    if !d.free {
        match top_class_report(d) {
            Ok(r) if r.predicates_hold => {}
            Ok(r) => problems.push(format!("top class {} fails", r.summand_kind)),
            Err(e) => problems.push(e.to_string()),
        }
    }
    problems
}

pub fn enumerate_rows(max_beta: u32) -> Result<Vec<EnumRow>, CliError> {
    enumerate_with_witnesses(max_beta)
        .into_iter()
        .map(|(descriptor, witness)| {
            let decomposition = decompose(&descriptor)?;
            let problems = revalidate(&descriptor, &witness, &decomposition);
            Ok(EnumRow {
                descriptor,
                witness,
                decomposition,
                problems,
            })
        })
        .collect()
}

pub fn enumerate(max_beta: u32) -> Result<Outcome, CliError> {
    let rows = enumerate_rows(max_beta)?;
    let failed = rows.iter().any(|r| !r.problems.is_empty());
    let stdout = rows.iter().map(|r| format!("{r}\n")).collect();
    let code = if failed {
        ExitCode::VERIFICATION_FAILURE
    } else {
        ExitCode::SUCCESS
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code,
    })
}

/// The modules the catalog command charts.
pub fn catalog_modules() -> [StandardModule; 6] {
    [
        StandardModule::m(),
        StandardModule::m2(),
        StandardModule::a(1),
        StandardModule::f(1),
        StandardModule::d4n(1).expect("n = 1 is in range"),
        StandardModule::torsion_cone(3).expect("k = 3 is in range"),
    ]
}

pub fn catalog() -> String {
    let window = Window::default();
    let mut out = String::new();
    for m in catalog_modules() {
        writeln!(out, "== {m} ==").unwrap();
        out += &render_chart(&m, &window, ChartFormat::Ascii);
        out.push('\n');
    }
    out
}

pub fn mesh(text: &str) -> Result<Outcome, CliError> {
    let e = parse(text)?;
    let c = triangulate(&e)?;
    let x = c.complex();
    let [n0, n1, n2] = x.cell_counts();
    let mut out = String::new();
    writeln!(out, "expression {e}").unwrap();
    writeln!(out, "counts vertices {n0} edges {n1} triangles {n2}").unwrap();
    writeln!(out, "euler {}", x.euler_characteristic()).unwrap();
    writeln!(out, "cohomology {}", x.integral_cohomology()).unwrap();
    writeln!(out, "quotient {}", c.quotient().integral_cohomology()).unwrap();
    match mesh_invariants(&c) {
        Ok(d) => writeln!(out, "invariants {d}").unwrap(),
        Err(err) => writeln!(out, "invariants unavailable: {err}").unwrap(),
    }
    out += &dump(&c);
    Ok(Outcome::ok(out))
}
