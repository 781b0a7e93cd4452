//! End-to-end pipeline and the reports printed by the command-line tool.
//!
//! Reports are plain data: big integers are carried as decimal strings and
//! wall-clock timings are only recorded on request, so two runs on the same
//! input serialize to identical JSON.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::deficiency::{
    check_bad_primes_divide, deficiency_evaluated, deficiency_symbolic, prime_factors,
    symbolic_feasible, DeficiencyMethod,
};
use crate::error::{Error, Result};
use crate::frame::{build_frame, AmbientChoice, AmbientFrame, AmbientKind};
use crate::hilbert::{secondary_degrees, HilbertData};
use crate::modp::{check_agreement, is_good_prime, ModPVerdict};
use crate::parse::GroupInput;
use crate::poly::SparsePoly;
use crate::secondary::{universal_secondaries, SecondarySet};

pub const SCHEMA_VERSION: u32 = 1;

/// Default cap on secondary degrees.
pub const DEFAULT_MAX_DEGREE: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Verification {
    #[default]
    Off,
    /// Every prime dividing `|G|`.
    GroupPrimes,
    Primes(Vec<u64>),
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub ambient: AmbientChoice,
    pub point: Option<Vec<BigInt>>,
    pub max_degree: u32,
    pub verify: Verification,
    /// Expand `det M(θ)` when the frame passes `symbolic_feasible`.
    pub symbolic: bool,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            ambient: AmbientChoice::Auto,
            point: None,
            max_degree: DEFAULT_MAX_DEGREE,
            verify: Verification::Off,
            symbolic: true,
            timings: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub n: usize,
    pub generators: Vec<String>,
    pub order: usize,
    pub signed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbientSummary {
    pub kind: AmbientKind,
    pub order: usize,
    /// 1-based point blocks.
    pub blocks: Vec<Vec<usize>>,
    pub primary_degrees: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondaryEntry {
    pub degree: u32,
    pub expression: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaExponent {
    pub orbit: String,
    pub hyperplanes: usize,
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub frame_us: u64,
    pub hilbert_us: u64,
    pub secondaries_us: u64,
    pub deficiency_us: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbolic_us: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification_us: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: GroupSummary,
    pub ambient: AmbientSummary,
    pub index: usize,
    pub secondary_degrees: Vec<u32>,
    pub goebel_bound: u64,
    pub secondaries: Vec<SecondaryEntry>,
    pub evaluation_point: Vec<String>,
    pub deficiency: String,
    pub bad_primes: Vec<u64>,
    pub det_sign: i8,
    pub method: DeficiencyMethod,
    pub delta_exponents: Vec<DeltaExponent>,
    pub delta_degree: u64,
    pub delta: String,
    pub identities_checked: Vec<IdentityCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<ModPVerdict>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl AnalysisReport {
    pub fn deficiency_value(&self) -> BigInt {
        self.deficiency
            .parse()
            .expect("deficiency is a decimal integer")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros() as u64
}

fn group_summary(input: &GroupInput, frame: &AmbientFrame) -> GroupSummary {
    GroupSummary {
        n: input.n,
        generators: input.generators.iter().map(|g| g.to_string()).collect(),
        order: frame.subgroup().order(),
        signed: frame.subgroup().is_signed(),
    }
}

fn ambient_summary(frame: &AmbientFrame) -> AmbientSummary {
    AmbientSummary {
        kind: frame.kind(),
        order: frame.sigma().order(),
        blocks: frame
            .blocks()
            .iter()
            .map(|b| b.iter().map(|p| p + 1).collect())
            .collect(),
        primary_degrees: frame.primary_degrees().to_vec(),
    }
}

fn delta_exponents(frame: &AmbientFrame) -> Vec<DeltaExponent> {
    frame
        .hyperplane_orbits()
        .iter()
        .map(|o| DeltaExponent {
            orbit: o.label(),
            hyperplanes: o.hyperplanes.len(),
            exponent: o.exponent,
        })
        .collect()
}

/// `Δ(G)` as a product of linear forms, e.g. `(x1 - x2)^3*(x1 - x3)^3`.
pub fn render_delta(frame: &AmbientFrame) -> String {
    let mut factors = Vec::new();
    for o in frame.hyperplane_orbits() {
        if o.exponent == 0 {
            continue;
        }
        for h in &o.hyperplanes {
            let form = SparsePoly::linear(&h.form).render();
            let base = if form.contains(' ') {
                format!("({form})")
            } else {
                form
            };
            factors.push(if o.exponent == 1 {
                base
            } else {
                format!("{base}^{}", o.exponent)
            });
        }
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn secondary_entries(set: &SecondarySet) -> Vec<SecondaryEntry> {
    set.thetas
        .iter()
        .map(|t| SecondaryEntry {
            degree: t.degree,
            expression: t.render(),
        })
        .collect()
}

/// Frame, degree identities and Hilbert data shared by every subcommand.
struct Prepared {
    frame: AmbientFrame,
    hilbert: HilbertData,
    identities: Vec<IdentityCheck>,
    frame_us: u64,
    hilbert_us: u64,
}

fn prepare(input: &GroupInput, opts: &AnalyzeOptions) -> Result<Prepared> {
    let t = Instant::now();
    let group = input.group()?;
    let frame = build_frame(&group, opts.ambient)?;
    let mut identities = Vec::new();
    let check = frame.delta_degree_check()?;
    identities.push(IdentityCheck {
        name: "delta_degree".into(),
        detail: format!(
            "2·deg Δ(G) = {} = ℓ(|R(Σ)| - |R(G)|) = {}·({} - {})",
            2 * check.degree,
            check.index,
            check.ambient_reflections,
            check.subgroup_reflections
        ),
    });
    let from_cosets = frame.reflections_from_cosets()?;
    if from_cosets != group.count_reflections() {
        return Err(Error::Invariant(format!(
            "coset formula gives {from_cosets} reflections, the group has {}",
            group.count_reflections()
        )));
    }
    identities.push(IdentityCheck {
        name: "reflection_count".into(),
        detail: format!("|R(G)| = {from_cosets} from the coset action and by enumeration"),
    });
    let frame_us = micros(t);

    let t = Instant::now();
    let hilbert = secondary_degrees(&frame)?;
    if hilbert.max_degree() > opts.max_degree {
        return Err(Error::Unsupported(format!(
            "secondary of degree {} exceeds the cap {}",
            hilbert.max_degree(),
            opts.max_degree
        )));
    }
    identities.push(IdentityCheck {
        name: "degree_sum".into(),
        detail: format!(
            "Σ a_j = {} = deg Δ(G), {} secondaries",
            hilbert.degree_sum(),
            hilbert.degrees.len()
        ),
    });
    Ok(Prepared {
        frame,
        hilbert,
        identities,
        frame_us,
        hilbert_us: micros(t),
    })
}

fn primes_to_verify(opts: &AnalyzeOptions, order: usize) -> Option<Vec<u64>> {
    match &opts.verify {
        Verification::Off => None,
        Verification::GroupPrimes => Some(prime_factors(order as u64)),
        Verification::Primes(ps) => Some(ps.clone()),
    }
}

/// Frame, Hilbert series, universal secondaries, deficiency and, on
/// request, the mod-p oracle.
pub fn analyze(input: &GroupInput, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let Prepared {
        frame,
        hilbert,
        mut identities,
        frame_us,
        hilbert_us,
    } = prepare(input, opts)?;

    let t = Instant::now();
    let set = universal_secondaries(&frame, &hilbert, opts.point.as_deref())?;
    let secondaries_us = micros(t);

    let t = Instant::now();
    let polys = set.polys();
    let evaluated = deficiency_evaluated(&frame, &polys, &set.point)?;
    let delta_z = frame.discriminant_at(&set.point).abs();
    let (q, r) = set.mu.div_rem(&delta_z);
    if !r.is_zero() || q != evaluated.deficiency {
        return Err(Error::Invariant(format!(
            "greedy μ = {} does not match ℧·|Δ(z)| = {}·{}",
            set.mu, evaluated.deficiency, delta_z
        )));
    }
    identities.push(IdentityCheck {
        name: "evaluated_deficiency".into(),
        detail: format!("|det M(θ)(z)| = {} = ℧·|Δ(G)(z)|", set.mu),
    });
    let order = frame.subgroup().order();
    check_bad_primes_divide(&evaluated.bad_primes, order as u64)?;
    identities.push(IdentityCheck {
        name: "bad_primes_divide_order".into(),
        detail: format!("{:?} all divide |G| = {order}", evaluated.bad_primes),
    });
    let deficiency_us = micros(t);

    let mut report_def = evaluated.clone();
    let mut symbolic_us = None;
    if opts.symbolic && symbolic_feasible(&frame) {
        let t = Instant::now();
        let (sym, _) = deficiency_symbolic(&frame, &polys)?;
        if sym.deficiency != evaluated.deficiency || sym.det_sign != evaluated.det_sign {
            return Err(Error::Invariant(format!(
                "symbolic ℧ = {}·{} but evaluated ℧ = {}·{}",
                sym.det_sign, sym.deficiency, evaluated.det_sign, evaluated.deficiency
            )));
        }
        identities.push(IdentityCheck {
            name: "symbolic_identity".into(),
            detail: format!(
                "det M(θ) = {} · {} · Δ(G) as polynomials",
                sym.det_sign, sym.deficiency
            ),
        });
        report_def = sym;
        symbolic_us = Some(micros(t));
    }

    let mut verification = None;
    let mut verification_us = None;
    if let Some(primes) = primes_to_verify(opts, order) {
        let t = Instant::now();
        let verdicts = primes
            .iter()
            .map(|&p| is_good_prime(&frame, &set.thetas, p))
            .collect::<Result<Vec<_>>>()?;
        check_agreement(&verdicts, &report_def.deficiency)?;
        let (compared, skipped): (Vec<u64>, Vec<u64>) = verdicts
            .iter()
            .map(|v| (v.prime, v.faithful))
            .fold((Vec::new(), Vec::new()), |(mut c, mut s), (p, f)| {
                if f {
                    c.push(p)
                } else {
                    s.push(p)
                }
                (c, s)
            });
        let mut detail = format!("p good ⇔ p ∤ ℧ for p in {compared:?}");
        if !skipped.is_empty() {
            let _ = write!(
                detail,
                "; {skipped:?} not compared (ambient not faithful mod p)"
            );
        }
        identities.push(IdentityCheck {
            name: "modp_agreement".into(),
            detail,
        });
        verification = Some(verdicts);
        verification_us = Some(micros(t));
    }

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        group: group_summary(input, &frame),
        ambient: ambient_summary(&frame),
        index: frame.index(),
        secondary_degrees: hilbert.degrees.clone(),
        goebel_bound: hilbert.goebel_bound,
        secondaries: secondary_entries(&set),
        evaluation_point: set.point.iter().map(|v| v.to_string()).collect(),
        deficiency: report_def.deficiency.to_string(),
        bad_primes: report_def.bad_primes.clone(),
        det_sign: report_def.det_sign,
        method: report_def.method,
        delta_exponents: delta_exponents(&frame),
        delta_degree: frame.discriminant_degree(),
        delta: render_delta(&frame),
        identities_checked: identities,
        verification,
        timings: opts.timings.then_some(Timings {
            frame_us,
            hilbert_us,
            secondaries_us,
            deficiency_us,
            symbolic_us,
            verification_us,
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertReport {
    pub schema: u32,
    pub group: GroupSummary,
    pub ambient: AmbientSummary,
    pub index: usize,
    pub secondary_degrees: Vec<u32>,
    pub goebel_bound: u64,
    pub delta_exponents: Vec<DeltaExponent>,
    pub delta_degree: u64,
    pub identities_checked: Vec<IdentityCheck>,
}

pub fn hilbert_report(input: &GroupInput, opts: &AnalyzeOptions) -> Result<HilbertReport> {
    let p = prepare(input, opts)?;
    Ok(HilbertReport {
        schema: SCHEMA_VERSION,
        group: group_summary(input, &p.frame),
        ambient: ambient_summary(&p.frame),
        index: p.frame.index(),
        secondary_degrees: p.hilbert.degrees.clone(),
        goebel_bound: p.hilbert.goebel_bound,
        delta_exponents: delta_exponents(&p.frame),
        delta_degree: p.frame.discriminant_degree(),
        identities_checked: p.identities,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub group: GroupSummary,
    pub index: usize,
    pub secondaries: Vec<SecondaryEntry>,
    pub verification: Vec<ModPVerdict>,
}

/// Universal secondaries followed by the mod-p oracle alone.
pub fn verify_report(
    input: &GroupInput,
    opts: &AnalyzeOptions,
    primes: &[u64],
) -> Result<VerifyReport> {
    let p = prepare(input, opts)?;
    let set = universal_secondaries(&p.frame, &p.hilbert, opts.point.as_deref())?;
    let verification = primes
        .iter()
        .map(|&q| is_good_prime(&p.frame, &set.thetas, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        schema: SCHEMA_VERSION,
        group: group_summary(input, &p.frame),
        index: p.frame.index(),
        secondaries: secondary_entries(&set),
        verification,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDeficiency {
    pub point: Vec<String>,
    pub deficiency: String,
    pub det_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema: u32,
    pub group: GroupSummary,
    pub index: usize,
    pub secondaries: Vec<SecondaryEntry>,
    pub determinant_terms: usize,
    pub det_sign: i8,
    pub deficiency: String,
    pub delta: String,
    pub evaluated: Vec<PointDeficiency>,
}

/// Symbolic `det M(θ)` for the universal set, cross-checked against the
/// evaluated deficiency at every default point.
pub fn oracle_report(input: &GroupInput, opts: &AnalyzeOptions) -> Result<OracleReport> {
    let p = prepare(input, opts)?;
    let set = universal_secondaries(&p.frame, &p.hilbert, opts.point.as_deref())?;
    let polys = set.polys();
    let (sym, det) = deficiency_symbolic(&p.frame, &polys)?;
    let mut evaluated = Vec::new();
    for z in p.frame.default_points() {
        let ev = deficiency_evaluated(&p.frame, &polys, &z)?;
        if ev.deficiency != sym.deficiency || ev.det_sign != sym.det_sign {
            return Err(Error::Invariant(format!(
                "evaluated ℧ = {}·{} at {z:?}, symbolic {}·{}",
                ev.det_sign, ev.deficiency, sym.det_sign, sym.deficiency
            )));
        }
        evaluated.push(PointDeficiency {
            point: z.iter().map(|v| v.to_string()).collect(),
            deficiency: ev.deficiency.to_string(),
            det_sign: ev.det_sign,
        });
    }
    Ok(OracleReport {
        schema: SCHEMA_VERSION,
        group: group_summary(input, &p.frame),
        index: p.frame.index(),
        secondaries: secondary_entries(&set),
        determinant_terms: det.len(),
        det_sign: sym.det_sign,
        deficiency: sym.deficiency.to_string(),
        delta: render_delta(&p.frame),
        evaluated,
    })
}

fn group_line(out: &mut String, g: &GroupSummary) {
    let _ = writeln!(out, "group: n={}; gens={}", g.n, g.generators.join(";"));
    let _ = writeln!(
        out,
        "|G| = {}{}",
        g.order,
        if g.signed { " (signed)" } else { "" }
    );
}

fn secondaries_block(out: &mut String, s: &[SecondaryEntry]) {
    let _ = writeln!(out, "secondaries:");
    for (j, e) in s.iter().enumerate() {
        let _ = writeln!(out, "  θ{} (degree {}) = {}", j + 1, e.degree, e.expression);
    }
}

fn verdict_line(out: &mut String, v: &ModPVerdict) {
    match &v.witness {
        None => {
            let note = if v.faithful {
                ""
            } else {
                ", ambient not faithful mod p"
            };
            let _ = writeln!(
                out,
                "  p = {}: good (degrees 0..={}{note})",
                v.prime, v.degrees_checked
            );
        }
        Some(w) if !v.faithful => {
            let _ = writeln!(
                out,
                "  p = {}: bad, {} not in the image in degree {} (ambient not faithful mod p)",
                v.prime, w.orbit, w.degree
            );
        }
        Some(w) => {
            let _ = writeln!(
                out,
                "  p = {}: bad, {} not in the image in degree {} (rank {} of {})",
                v.prime, w.orbit, w.degree, w.image_rank, w.dimension
            );
        }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn render_analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    let _ = writeln!(
        out,
        "ambient: {} (order {}), index ℓ = {}",
        r.ambient.kind, r.ambient.order, r.index
    );
    let _ = writeln!(
        out,
        "secondary degrees: {} (Göbel bound {})",
        join(&r.secondary_degrees, " "),
        r.goebel_bound
    );
    secondaries_block(&mut out, &r.secondaries);
    let _ = writeln!(out, "discriminant exponents:");
    for e in &r.delta_exponents {
        let _ = writeln!(
            out,
            "  {}: {} hyperplanes, e = {}",
            e.orbit, e.hyperplanes, e.exponent
        );
    }
    let _ = writeln!(out, "deg Δ(G) = {}", r.delta_degree);
    let _ = writeln!(out, "Δ(G) = {}", r.delta);
    let _ = writeln!(out, "evaluation point: ({})", r.evaluation_point.join(", "));
    let _ = writeln!(out, "℧(G) = {}", r.deficiency);
    let _ = writeln!(
        out,
        "bad primes: {}",
        if r.bad_primes.is_empty() {
            "none".to_string()
        } else {
            join(&r.bad_primes, ", ")
        }
    );
    if r.method == DeficiencyMethod::Symbolic {
        let _ = writeln!(out, "det M = {} · {} · Δ(G)", r.det_sign, r.deficiency);
    }
    let _ = writeln!(out, "identities checked:");
    for c in &r.identities_checked {
        let _ = writeln!(out, "  {}: {}", c.name, c.detail);
    }
    if let Some(vs) = &r.verification {
        let _ = writeln!(out, "verification:");
        for v in vs {
            verdict_line(&mut out, v);
        }
    }
    if let Some(t) = &r.timings {
        let ms = |us: u64| us as f64 / 1e3;
        let _ = writeln!(
            out,
            "timings (ms): frame {:.1}, hilbert {:.1}, secondaries {:.1}, deficiency {:.1}",
            ms(t.frame_us),
            ms(t.hilbert_us),
            ms(t.secondaries_us),
            ms(t.deficiency_us)
        );
        if let Some(s) = t.symbolic_us {
            let _ = writeln!(out, "  symbolic {:.1}", ms(s));
        }
        if let Some(v) = t.verification_us {
            let _ = writeln!(out, "  verification {:.1}", ms(v));
        }
    }
    out
}

pub fn render_hilbert_text(r: &HilbertReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    let _ = writeln!(
        out,
        "ambient: {} (order {}), primary degrees {}",
        r.ambient.kind,
        r.ambient.order,
        join(&r.ambient.primary_degrees, " ")
    );
    let _ = writeln!(out, "index ℓ = {}", r.index);
    let _ = writeln!(
        out,
        "secondary degrees: {}",
        join(&r.secondary_degrees, " ")
    );
    let _ = writeln!(out, "deg Δ(G) = {}", r.delta_degree);
    let _ = writeln!(out, "identities checked:");
    for c in &r.identities_checked {
        let _ = writeln!(out, "  {}: {}", c.name, c.detail);
    }
    out
}

pub fn render_verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    secondaries_block(&mut out, &r.secondaries);
    let _ = writeln!(out, "verification:");
    for v in &r.verification {
        verdict_line(&mut out, v);
    }
    out
}

pub fn render_oracle_text(r: &OracleReport) -> String {
    let mut out = String::new();
    group_line(&mut out, &r.group);
    secondaries_block(&mut out, &r.secondaries);
    let _ = writeln!(out, "det M has {} terms", r.determinant_terms);
    let _ = writeln!(out, "Δ(G) = {}", r.delta);
    let _ = writeln!(out, "det M = {} · {} · Δ(G)", r.det_sign, r.deficiency);
    for e in &r.evaluated {
        let _ = writeln!(
            out,
            "  at ({}): ℧ = {}, sign {}",
            e.point.join(", "),
            e.deficiency,
            e.det_sign
        );
    }
    out
}
