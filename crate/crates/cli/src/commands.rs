use std::fmt::{Display, Write as _};

use bsdh_core::chow;
use bsdh_core::enumerate::{self, Report};
use bsdh_core::extremal::{self, basis_subsequence};
use bsdh_core::intersect::{self, LineStatus};
use bsdh_core::{AdmissibleSeq, Algorithm, CurveClass, DivisorClass, Error, ExtremalBasis, Word};
use serde::Serialize;

use crate::{Command, Failure, Format, RunConfig};

pub struct Output {
    pub text: String,
    pub code: u8,
}

#[derive(Serialize)]
struct RootSystemOut {
    name: Option<String>,
    rank: usize,
    finite: bool,
    cartan: Vec<Vec<i32>>,
}

#[derive(Serialize)]
struct ExpandOut {
    seq: AdmissibleSeq,
    label: String,
    method: String,
    coeffs: Vec<i64>,
}

#[derive(Serialize)]
struct BasisOut {
    algorithm: String,
    subsequences: Vec<AdmissibleSeq>,
    rays: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct MoriOut {
    mori_rays: Vec<usize>,
}

#[derive(Serialize)]
struct FanoOut {
    fano: bool,
    lines: Vec<LineStatus>,
}

#[derive(Serialize)]
struct AmpleOut {
    divisor: DivisorClass,
    ray_degrees: Vec<i64>,
    toric_ample: bool,
    /// `null` for a divisor given in the boundary basis.
    bsdh_ample: Option<bool>,
}

#[derive(Serialize)]
struct ReportOut {
    root_system: RootSystemOut,
    word: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<ExpandOut>,
    basis: BasisOut,
    mori_rays: Vec<usize>,
    fano: FanoOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    ample: Option<AmpleOut>,
    /// `null` when the word is longer than the enumeration cap.
    enumerate: Option<Report>,
}

pub fn run(cfg: &RunConfig) -> Result<Output, Failure> {
    let w = &cfg.input.word;
    let json = cfg.format == Format::Json;
    let mut code = 0;
    let text = match cfg.command {
        Command::Expand => {
            let out = expand(cfg)?;
            if json { to_json(&out) } else { expand_text(&out) }
        }
        Command::Basis => {
            let out = basis(w, cfg.algorithm)?;
            if json { to_json(&out) } else { basis_text(&out) }
        }
        Command::Mori => {
            let out = MoriOut {
                mori_rays: intersect::mori_rays(w),
            };
            if json { to_json(&out) } else { mori_text(&out) }
        }
        Command::Fano => {
            let out = fano(w)?;
            if json { to_json(&out) } else { fano_text(w, &out) }
        }
        Command::Ample => {
            let d = cfg.input.divisor.as_ref().expect("checked when parsing");
            let out = ample(w, d)?;
            if json { to_json(&out) } else { ample_text(&out) }
        }
        Command::Enumerate => {
            let report = enumerate::verify_report::<i64>(w, cfg.cap)?;
            if !report.all_pass() {
                code = 4;
            }
            if json { to_json(&report) } else { report_text(&report) }
        }
        Command::Report => {
            let out = report(cfg)?;
            if out.enumerate.as_ref().is_some_and(|r| !r.all_pass()) {
                code = 4;
            }
            if json { to_json(&out) } else { full_text(w, &out) }
        }
    };
    Ok(Output { text, code })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn tuple<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn root_system(cfg: &RunConfig) -> RootSystemOut {
    let rs = &cfg.input.rs;
    RootSystemOut {
        name: rs.name().map(|(f, n)| format!("{f}{n}")),
        rank: rs.rank(),
        finite: rs.is_finite(),
        cartan: rs.cartan().to_vec(),
    }
}

fn expand(cfg: &RunConfig) -> Result<ExpandOut, Failure> {
    let w = &cfg.input.word;
    let seq = cfg.input.seq.as_ref().expect("checked when parsing");
    let class: CurveClass = chow::expand_with(w, seq, cfg.method)?;
    if let Some(bound) = chow::soft_bound_violation(w, seq, &class) {
        eprintln!("warning: a coefficient of {} exceeds the size bound {bound}", seq.label());
    }
    Ok(ExpandOut {
        seq: seq.clone(),
        label: seq.label(),
        method: cfg.method.to_string(),
        coeffs: class.coeffs,
    })
}

fn expand_text(out: &ExpandOut) -> String {
    let class = CurveClass::new(out.coeffs.clone());
    format!("{} = {}\n", out.label, class)
}

/// Runs the requested algorithm and the other one at every start position;
/// a mismatch is an internal error carrying both subsequences.
fn basis(w: &Word, algorithm: Algorithm) -> Result<BasisOut, Failure> {
    let mut subsequences = Vec::with_capacity(w.len());
    for start in 1..=w.len() {
        let comp = basis_subsequence::<i64>(w, start, Algorithm::Comp)?;
        let weyl = basis_subsequence::<i64>(w, start, Algorithm::Weyl)?;
        if comp != weyl {
            return Err(Error::AlgorithmDisagreement {
                start,
                comp: comp.positions().to_vec(),
                weyl: weyl.positions().to_vec(),
            }
            .into());
        }
        subsequences.push(if algorithm == Algorithm::Comp { comp } else { weyl });
    }
    let rays = subsequences
        .iter()
        .map(|s| chow::expand::<i64>(w, s).map(|c| c.coeffs))
        .collect::<Result<_, _>>()?;
    Ok(BasisOut {
        algorithm: algorithm.to_string(),
        subsequences,
        rays,
    })
}

fn basis_text(out: &BasisOut) -> String {
    let mut s = String::new();
    for (j, (seq, ray)) in out.subsequences.iter().zip(&out.rays).enumerate() {
        let _ = writeln!(s, "L_{}(w) = {} = {}", j + 1, seq.label(), tuple(ray));
    }
    s
}

fn mori_text(out: &MoriOut) -> String {
    if out.mori_rays.is_empty() {
        return "Mori rays: none\n".into();
    }
    let names: Vec<String> = out.mori_rays.iter().map(|r| format!("L_{r}")).collect();
    format!("Mori rays: {}\n", names.join(", "))
}

fn fano(w: &Word) -> Result<FanoOut, Failure> {
    let lines = (1..=w.len())
        .map(|r| intersect::line_status(w, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FanoOut {
        fano: lines.iter().all(|l| l.mori),
        lines,
    })
}

fn line_reason(l: &LineStatus) -> String {
    let r = l.position;
    match (l.obstruction, l.canonical_degree) {
        (Some((j, v)), _) => format!("L_{r} not extremal (({j},{r})={v})"),
        (None, Some(k)) if l.mori => format!("L_{r} Mori (K.L_{r}={k})"),
        (None, Some(k)) => format!("L_{r} extremal but not Mori (K.L_{r}={k})"),
        (None, None) => format!("L_{r} not Mori"),
    }
}

fn fano_text(w: &Word, out: &FanoOut) -> String {
    let mut s = String::new();
    match out.lines.iter().find(|l| !l.mori) {
        None => {
            let _ = writeln!(s, "Fano: all {} Schubert lines are Mori rays", w.len());
        }
        Some(bad) => {
            let _ = writeln!(s, "not Fano: {}", line_reason(bad));
        }
    }
    for l in &out.lines {
        let _ = writeln!(s, "  {}", line_reason(l));
    }
    s
}

fn ample(w: &Word, d: &DivisorClass) -> Result<AmpleOut, Failure> {
    let basis: ExtremalBasis = extremal::extremal_basis(w)?;
    let ray_degrees = intersect::ray_degrees(w, &basis, d)?;
    let bsdh_ample = match d {
        DivisorClass::Lt { .. } => Some(intersect::bsdh_ample(d)?),
        DivisorClass::Boundary { .. } => None,
    };
    // validates the length of a boundary divisor too
    d.to_boundary(w)?;
    Ok(AmpleOut {
        divisor: d.clone(),
        toric_ample: ray_degrees.iter().all(|&x| x > 0),
        ray_degrees,
        bsdh_ample,
    })
}

fn ample_text(out: &AmpleOut) -> String {
    let bsdh = match out.bsdh_ample {
        Some(b) => b.to_string(),
        None => "n/a (boundary basis)".into(),
    };
    format!(
        "degrees on L_j(w): {}\ntoric_ample: {}\nbsdh_ample: {}\n",
        tuple(&out.ray_degrees),
        out.toric_ample,
        bsdh
    )
}

fn report_text(r: &Report) -> String {
    let mut s = format!("fixed points: {}\ncurves: {}\n", r.fixed_points, r.curves);
    for c in &r.clauses {
        let _ = write!(s, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
        if let Some(w) = &c.witness {
            let _ = write!(s, ": {w}");
        }
        if let Some(d) = &c.detail {
            let _ = write!(s, " [{d}]");
        }
        s.push('\n');
    }
    s
}

fn report(cfg: &RunConfig) -> Result<ReportOut, Failure> {
    let w = &cfg.input.word;
    let expansion = cfg.input.seq.as_ref().map(|_| expand(cfg)).transpose()?;
    let ample = cfg.input.divisor.as_ref().map(|d| ample(w, d)).transpose()?;
    let enumerate = if w.len() <= cfg.cap {
        Some(enumerate::verify_report::<i64>(w, cfg.cap)?)
    } else {
        eprintln!("warning: word length {} exceeds --max-enumerate {}; enumeration skipped", w.len(), cfg.cap);
        None
    };
    Ok(ReportOut {
        root_system: root_system(cfg),
        word: w.roots(),
        expansion,
        basis: basis(w, cfg.algorithm)?,
        mori_rays: intersect::mori_rays(w),
        fano: fano(w)?,
        ample,
        enumerate,
    })
}

fn full_text(w: &Word, out: &ReportOut) -> String {
    let mut s = String::new();
    let name = out.root_system.name.clone().unwrap_or_else(|| format!("rank {} Cartan matrix", out.root_system.rank));
    let _ = writeln!(s, "root system: {name}\nword: {w}\n");
    if let Some(e) = &out.expansion {
        let _ = writeln!(s, "{}", expand_text(e));
    }
    let _ = writeln!(s, "{}", basis_text(&out.basis));
    let _ = writeln!(s, "{}", mori_text(&MoriOut { mori_rays: out.mori_rays.clone() }));
    let _ = writeln!(s, "{}", fano_text(w, &out.fano));
    if let Some(a) = &out.ample {
        let _ = writeln!(s, "{}", ample_text(a));
    }
    match &out.enumerate {
        Some(r) => s.push_str(&report_text(r)),
        None => s.push_str("enumeration skipped\n"),
    }
    s
}
