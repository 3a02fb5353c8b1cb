use std::fmt::{self, Write as _};

use super::classify::{Diagnostics, Verdict};
use super::subject::SpectrumNorm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Beurling,
    Hardy,
    GelfandShilov,
    CowlingPrice,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::Beurling,
        Theorem::Hardy,
        Theorem::GelfandShilov,
        Theorem::CowlingPrice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Beurling => "beurling",
            Theorem::Hardy => "hardy",
            Theorem::GelfandShilov => "gelfand-shilov",
            Theorem::CowlingPrice => "cowling-price",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    /// The degree bound the statement attaches to its conclusion.
    pub fn degree_bound(self) -> &'static str {
        match self {
            Theorem::Beurling => "degree < (d-2)/2",
            Theorem::Hardy => "degree <= d",
            Theorem::GelfandShilov => "degree < d-2",
            Theorem::CowlingPrice => "degree < min((d-2)/p, (d-2)/q)",
        }
    }
}

/// The class of functions a satisfied hypothesis forces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Conclusion {
    Zero,
    /// `P(x) e^{-γ|x|²}` with `deg P ≤ max_degree`; `width` is `γ` when the
    /// statement pins it.
    PolyTimesGaussian {
        max_degree: u32,
        width: Option<f64>,
    },
    /// Hypothesis failed or undecided: the statement says nothing.
    Unconstrained,
}

impl Conclusion {
    pub fn name(&self) -> &'static str {
        match self {
            Conclusion::Zero => "zero",
            Conclusion::PolyTimesGaussian { .. } => "poly_times_gaussian",
            Conclusion::Unconstrained => "unconstrained",
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::PolyTimesGaussian {
                max_degree,
                width: Some(w),
            } => {
                write!(f, "poly_times_gaussian(max_degree={max_degree}, width={w})")
            }
            Conclusion::PolyTimesGaussian {
                max_degree,
                width: None,
            } => {
                write!(f, "poly_times_gaussian(max_degree={max_degree})")
            }
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Integral,
    Supremum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rung {
    pub radius: f64,
    /// Spectrum-side radius when it differs from the signal side.
    pub radius_y: Option<f64>,
    pub ln_value: f64,
    /// Where a supremum is attained.
    pub attained_at: Option<(f64, f64)>,
}

impl Rung {
    pub fn value(&self) -> f64 {
        self.ln_value.exp()
    }
}

/// One quantity evaluated on the ladder, with its classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: &'static str,
    pub kind: SeriesKind,
    pub rungs: Vec<Rung>,
    pub diagnostics: Diagnostics,
}

impl Series {
    pub fn verdict(&self) -> Verdict {
        self.diagnostics.verdict
    }

    pub fn values(&self) -> Vec<f64> {
        self.rungs.iter().map(Rung::value).collect()
    }

    fn verdict_word(&self) -> &'static str {
        match (self.kind, self.verdict()) {
            (SeriesKind::Supremum, Verdict::Convergent) => "bounded",
            (SeriesKind::Supremum, Verdict::Divergent) => "unbounded",
            (_, v) => v.name(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub theorem: Theorem,
    pub params: Vec<(&'static str, f64)>,
    pub norm: SpectrumNorm,
    pub subject: String,
    pub series: Vec<Series>,
    pub verdict: Verdict,
    pub conclusion: Conclusion,
    /// For closed-form subjects: whether the subject itself lies in the
    /// concluded class.
    pub fixture_consistent: Option<bool>,
    pub notes: Vec<String>,
}

impl CertificateReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.verdict == Verdict::Convergent
    }

    pub fn hypothesis_word(&self) -> &'static str {
        match self.verdict {
            Verdict::Convergent => "holds",
            Verdict::Divergent => "fails",
            Verdict::Inconclusive => "undecided",
        }
    }

    pub fn series(&self, label: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.label == label)
    }

    /// Human-readable form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "certificate: {} ({})",
            self.theorem.name(),
            params.join(", ")
        );
        let _ = writeln!(out, "subject: {}", self.subject);
        let _ = writeln!(out, "spectrum norm: {}", self.norm.name());
        for s in &self.series {
            let _ = writeln!(out, "{}:", s.label);
            for r in &s.rungs {
                let radius = match r.radius_y {
                    Some(ry) => format!("R={:.6} / {:.6}", r.radius, ry),
                    None => format!("R={:.6}", r.radius),
                };
                let _ = write!(
                    out,
                    "  {radius}  value={:.6e}  ln={:.6}",
                    r.value(),
                    r.ln_value
                );
                if let Some((a, b)) = r.attained_at {
                    let _ = write!(out, "  at=({a:.6}, {b:.6})");
                }
                out.push('\n');
            }
            let d = &s.diagnostics;
            let exponent_name = match s.kind {
                SeriesKind::Integral => "shell exponent",
                SeriesKind::Supremum => "growth exponent",
            };
            let _ = writeln!(
                out,
                "  relative increment={:.6e}  {}={}  log-log slope={}  => {}",
                d.relative_increment,
                exponent_name,
                opt(d.exponent),
                opt(d.slope),
                s.verdict_word()
            );
        }
        let _ = writeln!(
            out,
            "verdict: {} (hypothesis {})",
            self.verdict,
            self.hypothesis_word()
        );
        let _ = writeln!(out, "conclusion: {}", self.conclusion);
        let _ = writeln!(out, "degree bound: {}", self.theorem.degree_bound());
        if let Some(c) = self.fixture_consistent {
            let _ = writeln!(
                out,
                "subject in concluded class: {}",
                if c { "yes" } else { "no" }
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }

    /// Machine-readable `key=value` lines.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k}={v}");
        };
        kv("theorem", self.theorem.name().into());
        for (k, v) in &self.params {
            kv(&format!("param.{k}"), format!("{v}"));
        }
        kv("subject", self.subject.clone());
        kv("norm", self.norm.name().into());
        for (i, s) in self.series.iter().enumerate() {
            let p = format!("series.{i}");
            let join =
                |f: &dyn Fn(&Rung) -> String| s.rungs.iter().map(f).collect::<Vec<_>>().join(",");
            kv(&format!("{p}.label"), s.label.into());
            kv(
                &format!("{p}.kind"),
                match s.kind {
                    SeriesKind::Integral => "integral".into(),
                    SeriesKind::Supremum => "supremum".into(),
                },
            );
            kv(&format!("{p}.radius"), join(&|r| format!("{:e}", r.radius)));
            if s.rungs.iter().any(|r| r.radius_y.is_some()) {
                kv(
                    &format!("{p}.radius_y"),
                    join(&|r| format!("{:e}", r.radius_y.unwrap_or(r.radius))),
                );
            }
            kv(&format!("{p}.value"), join(&|r| format!("{:e}", r.value())));
            kv(
                &format!("{p}.ln_value"),
                join(&|r| format!("{:e}", r.ln_value)),
            );
            if s.rungs.iter().any(|r| r.attained_at.is_some()) {
                kv(
                    &format!("{p}.attained_at"),
                    join(&|r| {
                        r.attained_at
                            .map_or("none".into(), |(a, b)| format!("{a:e};{b:e}"))
                    }),
                );
            }
            kv(
                &format!("{p}.relative_increment"),
                format!("{:e}", s.diagnostics.relative_increment),
            );
            kv(&format!("{p}.exponent"), opt(s.diagnostics.exponent));
            kv(&format!("{p}.slope"), opt(s.diagnostics.slope));
            kv(&format!("{p}.verdict"), s.verdict().name().into());
        }
        kv("verdict", self.verdict.name().into());
        kv("hypothesis", self.hypothesis_word().into());
        kv("conclusion", self.conclusion.name().into());
        match self.conclusion {
            Conclusion::PolyTimesGaussian { max_degree, width } => {
                kv("max_degree", max_degree.to_string());
                kv("width", width.map_or("none".into(), |w| format!("{w:e}")));
            }
            _ => {
                kv("max_degree", "none".into());
                kv("width", "none".into());
            }
        }
        kv("degree_bound", self.theorem.degree_bound().into());
        kv(
            "fixture_consistent",
            self.fixture_consistent
                .map_or("n/a".into(), |c| c.to_string()),
        );
        for (i, n) in self.notes.iter().enumerate() {
            kv(&format!("note.{i}"), n.clone());
        }
        out
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or("n/a".into(), |x| format!("{x:.6}"))
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
