//! Verdicts and counterexamples produced by the law checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lts::StepFunction;
use crate::relation::Relation;
use crate::stability::StateMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Preorder,
    Functorial,
    RightStable,
    LeftStable,
    Stable,
    /// `Rel(F)(R) ∘ ⊑_X ⊆ ⊑_Y ∘ Rel(F)(R)` together with the one-sided
    /// equality below; the report carries one part for each.
    Interchange,
    InterchangeInclusion,
    InterchangeEquality,
    Commute,
    CompositionRightStable,
    CompositionLeftStable,
    CompositionStable,
    FactoredLift,
    OpDuality,
    LiftTranspose,
}

impl Law {
    pub fn id(&self) -> &'static str {
        match self {
            Law::Preorder => "preorder",
            Law::Functorial => "functorial",
            Law::RightStable => "right-stable",
            Law::LeftStable => "left-stable",
            Law::Stable => "stable",
            Law::Interchange => "interchange",
            Law::InterchangeInclusion => "interchange-inclusion",
            Law::InterchangeEquality => "interchange-equality",
            Law::Commute => "commute",
            Law::CompositionRightStable => "composition-right-stable",
            Law::CompositionLeftStable => "composition-left-stable",
            Law::CompositionStable => "composition-stable",
            Law::FactoredLift => "factored-lift",
            Law::OpDuality => "op-duality",
            Law::LiftTranspose => "lift-transpose",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A precondition of the law did not hold, so nothing was concluded.
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

/// A concrete instance on which a law fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `u ⊑ u` fails.
    Reflexivity { u: StepFunction },
    /// `u ⊑ v ⊑ w` but not `u ⊑ w`.
    Transitivity {
        u: StepFunction,
        v: StepFunction,
        w: StepFunction,
    },
    /// `u ⊑ v` but not `Ff(u) ⊑ Ff(v)`.
    Functoriality {
        f: StateMap,
        u: StepFunction,
        v: StepFunction,
    },
    /// `v ⊑_Y Ff(u)` with no `u' ⊑_X u` such that `Ff(u') = v`.
    RightStable {
        f: StateMap,
        u: StepFunction,
        v: StepFunction,
    },
    /// `Ff(u) ⊑_Y v` with no `u ⊑_X u'` such that `Ff(u') = v`.
    LeftStable {
        f: StateMap,
        u: StepFunction,
        v: StepFunction,
    },
    /// `lhs` is membership of `(u, v)` in `Rel_⊑((f×g)^{-1}R)`, `rhs` in
    /// `(Ff×Fg)^{-1}(Rel_⊑(R))`.
    Stable {
        f: StateMap,
        g: StateMap,
        relation: Relation,
        u: StepFunction,
        v: StepFunction,
        lhs: bool,
        rhs: bool,
    },
    /// The two sides of the interchange law named by the report.
    Interchange {
        relation: Relation,
        u: StepFunction,
        v: StepFunction,
        lhs: bool,
        rhs: bool,
    },
    /// Membership of `(u, v)` in `A ∘ B` and in `B ∘ A`.
    Commute {
        u: StepFunction,
        v: StepFunction,
        first: bool,
        second: bool,
    },
    /// Membership in the full lax lifting and in the factored lifting.
    FactoredLift {
        relation: Relation,
        u: StepFunction,
        v: StepFunction,
        full: bool,
        factored: bool,
    },
    /// The stability equation holds at this instance for one of the order
    /// and its opposite (at the mirrored instance) but not the other.
    OpDuality {
        f: StateMap,
        g: StateMap,
        relation: Relation,
        u: StepFunction,
        v: StepFunction,
        order_stable: bool,
        opposite_stable: bool,
    },
    /// `Rel_{⊑op}(R)(u, v)` against `Rel_⊑(R^op)(v, u)`.
    LiftTranspose {
        relation: Relation,
        u: StepFunction,
        v: StepFunction,
        opposite: bool,
        transposed: bool,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Reflexivity { u } => write!(f, "u = {u} is not below itself"),
            Witness::Transitivity { u, v, w } => {
                write!(f, "u = {u} ⊑ v = {v} ⊑ w = {w}, but not u ⊑ w")
            }
            Witness::Functoriality { f: m, u, v } => {
                write!(f, "f = {m}, u = {u} ⊑ v = {v}, but not Ff(u) ⊑ Ff(v)")
            }
            Witness::RightStable { f: m, u, v } => write!(
                f,
                "f = {m}, u = {u}, v = {v}: v ⊑ Ff(u) but no u' ⊑ u has Ff(u') = v"
            ),
            Witness::LeftStable { f: m, u, v } => write!(
                f,
                "f = {m}, u = {u}, v = {v}: Ff(u) ⊑ v but no u ⊑ u' has Ff(u') = v"
            ),
            Witness::Stable {
                f: m,
                g,
                relation,
                u,
                v,
                lhs,
                rhs,
            } => write!(
                f,
                "f = {m}, g = {g}, R = {relation:?}, u = {u}, v = {v}: \
                 (u,v) ∈ Rel((f×g)⁻¹R) is {lhs}, (Ff u, Fg v) ∈ Rel(R) is {rhs}"
            ),
            Witness::Interchange {
                relation,
                u,
                v,
                lhs,
                rhs,
            } => write!(f, "R = {relation:?}, u = {u}, v = {v}: lhs {lhs}, rhs {rhs}"),
            Witness::Commute {
                u,
                v,
                first,
                second,
            } => write!(f, "u = {u}, v = {v}: A∘B {first}, B∘A {second}"),
            Witness::FactoredLift {
                relation,
                u,
                v,
                full,
                factored,
            } => write!(
                f,
                "R = {relation:?}, u = {u}, v = {v}: full lifting {full}, factored {factored}"
            ),
            Witness::OpDuality {
                f: m,
                g,
                relation,
                u,
                v,
                order_stable,
                opposite_stable,
            } => write!(
                f,
                "f = {m}, g = {g}, R = {relation:?}, u = {u}, v = {v}: \
                 order {order_stable}, opposite {opposite_stable}"
            ),
            Witness::LiftTranspose {
                relation,
                u,
                v,
                opposite,
                transposed,
            } => write!(
                f,
                "R = {relation:?}, u = {u}, v = {v}: Rel_op(R) {opposite}, Rel(Rᵀ) {transposed}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub law: Law,
    /// Names of the orders involved, in argument order.
    pub orders: Vec<String>,
    /// Carrier sizes, in the law's own argument order.
    pub sizes: Vec<usize>,
    pub alphabet: usize,
    pub verdict: Verdict,
    pub coverage: Coverage,
    /// Number of instances evaluated.
    pub instances: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Sub-checks: interchange halves, composition preconditions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CheckReport>,
}

impl CheckReport {
    pub(crate) fn new(law: Law, orders: &[&str], sizes: &[usize], alphabet: usize) -> Self {
        CheckReport {
            law,
            orders: orders.iter().map(|s| s.to_string()).collect(),
            sizes: sizes.to_vec(),
            alphabet,
            verdict: Verdict::Pass,
            coverage: Coverage::Exhaustive,
            instances: 0,
            seed: None,
            witness: None,
            note: None,
            parts: Vec::new(),
        }
    }

    pub(crate) fn fail(mut self, witness: Witness) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// `pass (exhaustive up to sizes (1,2), alphabet 1)` and friends.
    pub fn verdict_label(&self) -> String {
        let sizes = self
            .sizes
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        match (self.verdict, self.coverage) {
            (Verdict::Pass, Coverage::Exhaustive) => format!(
                "pass (exhaustive up to sizes ({sizes}), alphabet {})",
                self.alphabet
            ),
            (Verdict::Pass, Coverage::Sampled) => format!(
                "pass (sampled: {} instances, seed {})",
                self.instances,
                self.seed.unwrap_or_default()
            ),
            (Verdict::Fail, _) => "fail".to_string(),
            (Verdict::Inconclusive, _) => "inconclusive".to_string(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}

impl CheckReport {
    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        writeln!(
            f,
            "{pad}{} [{}]: {} ({} instances)",
            self.law,
            self.orders.join(", "),
            self.verdict_label(),
            self.instances
        )?;
        if let Some(note) = &self.note {
            writeln!(f, "{pad}  note: {note}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "{pad}  witness: {w}")?;
        }
        for p in &self.parts {
            p.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}
