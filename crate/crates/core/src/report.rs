use std::fmt;

use crate::exactlin::{format_rational, Vector};

/// The identity a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    // algebras and coalgebras
    LeftUnit,
    RightUnit,
    Associativity,
    Commutativity,
    Coassociativity,
    LeftCounit,
    RightCounit,
    ComultMultiplicative,
    ComultUnital,
    CounitMultiplicative,
    CounitUnital,
    AntipodeLeft,
    AntipodeRight,
    AntipodeBijective,
    // transposed Poisson algebras
    Antisymmetry,
    Jacobi,
    TransposedLeibniz,
    DerivationLeibniz,
    // comodules and comodule algebras
    ComoduleCoassociativity,
    ComoduleCounit,
    CoactionMultiplicative,
    CoactionUnital,
    BracketColinear,
    // modules
    ActionUnital,
    ActionAssociative,
    LieModule,
    BracketThroughAction,
    ActionThroughLie,
    AssociativeActions,
    HopfModuleAction,
    HopfModuleLie,
    // maps
    ALinear,
    LieLinear,
    BLinear,
    HColinear,
    Retraction,
    Idempotent,
    ImageIsCoinvariants,
    Composite,
    WellDefined,
    ConditionModule,
    ConditionAlgebra,
    SubcomoduleStable,
    ClosedUnderProduct,
    ClosedUnderBracket,
    InvariantBracketVanishes,
    MapInCenter,
    MapUnital,
    MapMultiplicative,
    MapColinear,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::LeftUnit => "left unit",
            Law::RightUnit => "right unit",
            Law::Associativity => "associativity",
            Law::Commutativity => "commutativity",
            Law::Coassociativity => "coassociativity",
            Law::LeftCounit => "left counit",
            Law::RightCounit => "right counit",
            Law::ComultMultiplicative => "comultiplication is multiplicative",
            Law::ComultUnital => "comultiplication preserves unit",
            Law::CounitMultiplicative => "counit is multiplicative",
            Law::CounitUnital => "counit preserves unit",
            Law::AntipodeLeft => "m(S⊗id)Δ = uε",
            Law::AntipodeRight => "m(id⊗S)Δ = uε",
            Law::AntipodeBijective => "antipode bijective",
            Law::Antisymmetry => "antisymmetry",
            Law::Jacobi => "Jacobi identity",
            Law::TransposedLeibniz => "transposed Leibniz 2a{b,c} = {ab,c} + {b,ac}",
            Law::DerivationLeibniz => "derivation D(xy) = D(x)y + xD(y)",
            Law::ComoduleCoassociativity => "(id⊗Δ)ρ = (ρ⊗id)ρ",
            Law::ComoduleCounit => "(id⊗ε)ρ = id",
            Law::CoactionMultiplicative => "coaction is multiplicative",
            Law::CoactionUnital => "ρ(1) = 1⊗1",
            Law::BracketColinear => "ρ{a,b} = {a0,b0}⊗a1b1",
            Law::ActionUnital => "1·m = m",
            Law::ActionAssociative => "(ab)·m = a·(b·m)",
            Law::LieModule => "{a,b}⋄m = a⋄(b⋄m) - b⋄(a⋄m)",
            Law::BracketThroughAction => "2{a,b}·m = a⋄(b·m) - b⋄(a·m)",
            Law::ActionThroughLie => "2a·(b⋄m) = ab⋄m + b⋄(a·m)",
            Law::AssociativeActions => "(ab)⋄m = b·(a⋄m) for b in the center",
            Law::HopfModuleAction => "ρ(a·m) = a0·m0 ⊗ a1m1",
            Law::HopfModuleLie => "ρ(a⋄m) = a0⋄m0 ⊗ a1m1",
            Law::ALinear => "A-linear",
            Law::LieLinear => "Lie A-linear",
            Law::BLinear => "B-linear",
            Law::HColinear => "H-colinear",
            Law::Retraction => "λ∘ρ = id",
            Law::Idempotent => "P² = P",
            Law::ImageIsCoinvariants => "Im P = M^coH",
            Law::Composite => "composite is identity",
            Law::WellDefined => "relations subspace is stable",
            Law::ConditionModule => "{1,aa'}·p(m) = φ(a'1)⋄(a·p(a'0·m)) on M",
            Law::ConditionAlgebra => "{1,aa'}·p(a'') = φ(a'1)⋄(a·p(a'0·a'')) on A",
            Law::SubcomoduleStable => "ρ(S) ⊆ S⊗H",
            Law::ClosedUnderProduct => "closed under product",
            Law::ClosedUnderBracket => "closed under bracket",
            Law::InvariantBracketVanishes => "b⋄m = 0",
            Law::MapInCenter => "image in transposed Poisson center",
            Law::MapUnital => "φ(1) = 1",
            Law::MapMultiplicative => "φ(hh') = φ(h)φ(h')",
            Law::MapColinear => "ρφ = (φ⊗id)Δ",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One violated instance of a law: the basis indices it was evaluated on and
/// both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub law: Law,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| {
            let parts: Vec<String> = v.iter().map(format_rational).collect();
            format!("[{}]", parts.join(", "))
        };
        write!(
            f,
            "{} at {:?}: lhs {} rhs {}",
            self.law,
            self.indices,
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

/// Outcome of a verifier: the number of instances evaluated and every
/// violation found.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Records one evaluated instance; keeps a witness when the sides differ.
    pub fn compare(&mut self, law: Law, indices: &[usize], lhs: Vector, rhs: Vector) {
        self.checked += 1;
        if lhs != rhs {
            self.witnesses.push(Witness {
                law,
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn fail(&mut self, law: Law, indices: &[usize], lhs: Vector, rhs: Vector) {
        self.checked += 1;
        self.witnesses.push(Witness {
            law,
            indices: indices.to_vec(),
            lhs,
            rhs,
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.witnesses.extend(other.witnesses);
    }

    pub fn first(&self, law: Law) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.law == law)
    }

    pub fn violates(&self, law: Law) -> bool {
        self.first(law).is_some()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            return write!(f, "pass ({} instances)", self.checked);
        }
        writeln!(
            f,
            "FAIL ({} of {} instances)",
            self.witnesses.len(),
            self.checked
        )?;
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}
