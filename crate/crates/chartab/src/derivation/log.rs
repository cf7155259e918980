//! Step-by-step derivation log with a machine-readable mirror.
//!
//! Every derivation records each constructive move (what was built, from
//! what, with which verified norms and inner products) and every point
//! where a recomputed value disagrees with the bundled reference record.
//! Divergences are first-class output: they are detected and reported,
//! never silently absorbed.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct DerivationStep {
    pub index: usize,
    pub action: String,
    pub cite: String,
    pub output: String,
    pub degree: String,
    pub norm: String,
    pub checks: Vec<String>,
}

/// A verified difference between a recomputed quantity and the value the
/// reference record prints for it.
#[derive(Clone, Debug, Serialize)]
pub struct Divergence {
    pub id: String,
    pub location: String,
    pub printed: String,
    pub computed: String,
    pub note: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DerivationLog {
    pub group: String,
    pub steps: Vec<DerivationStep>,
    pub divergences: Vec<Divergence>,
    pub notes: Vec<String>,
}

impl DerivationLog {
    pub fn new(group: &str) -> Self {
        DerivationLog {
            group: group.to_string(),
            ..Default::default()
        }
    }

    pub fn step(
        &mut self,
        action: &str,
        cite: &str,
        output: &str,
        degree: impl ToString,
        norm: impl ToString,
        checks: Vec<String>,
    ) {
        self.steps.push(DerivationStep {
            index: self.steps.len() + 1,
            action: action.to_string(),
            cite: cite.to_string(),
            output: output.to_string(),
            degree: degree.to_string(),
            norm: norm.to_string(),
            checks,
        });
    }

    pub fn diverge(&mut self, id: &str, location: &str, printed: &str, computed: &str, note: &str) {
        self.divergences.push(Divergence {
            id: id.to_string(),
            location: location.to_string(),
            printed: printed.to_string(),
            computed: computed.to_string(),
            note: note.to_string(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn divergence_ids(&self) -> Vec<&str> {
        self.divergences.iter().map(|d| d.id.as_str()).collect()
    }

    /// Line-oriented text rendering:
    /// `STEP k: <action> [cite: <location>] -> <name> (degree d, norm m)`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("DERIVATION LOG {}\n", self.group));
        for s in &self.steps {
            out.push_str(&format!(
                "STEP {}: {} [cite: {}] -> {} (degree {}, norm {})\n",
                s.index, s.action, s.cite, s.output, s.degree, s.norm
            ));
            for c in &s.checks {
                out.push_str(&format!("  check: {c}\n"));
            }
        }
        for d in &self.divergences {
            out.push_str(&format!(
                "DIVERGENCE [{}] at {}: printed {} but computed {} ({})\n",
                d.id, d.location, d.printed, d.computed, d.note
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("NOTE: {n}\n"));
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("log serializes")
    }
}
