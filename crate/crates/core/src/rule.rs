use core::fmt;

/// Names of the graph rewrite rules.
///
/// `T1`–`T6` apply local gates to arbitrary graphs, `Ti`–`Tvii` apply local
/// gates to reduced graphs, `Tviii`–`Tx` apply CZ to reduced graphs, and the
/// `E` rules rewrite a graph without changing its state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    Ti,
    Tii,
    Tiii,
    Tiv,
    Tv,
    Tvi,
    Tvii,
    Tviii,
    Tix,
    Tx,
    E1,
    E2,
    Ei,
    Eii,
}

impl Rule {
    pub const ALL: [Rule; 20] = [
        Rule::T1,
        Rule::T2,
        Rule::T3,
        Rule::T4,
        Rule::T5,
        Rule::T6,
        Rule::Ti,
        Rule::Tii,
        Rule::Tiii,
        Rule::Tiv,
        Rule::Tv,
        Rule::Tvi,
        Rule::Tvii,
        Rule::Tviii,
        Rule::Tix,
        Rule::Tx,
        Rule::E1,
        Rule::E2,
        Rule::Ei,
        Rule::Eii,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::T1 => "T1",
            Rule::T2 => "T2",
            Rule::T3 => "T3",
            Rule::T4 => "T4",
            Rule::T5 => "T5",
            Rule::T6 => "T6",
            Rule::Ti => "T(i)",
            Rule::Tii => "T(ii)",
            Rule::Tiii => "T(iii)",
            Rule::Tiv => "T(iv)",
            Rule::Tv => "T(v)",
            Rule::Tvi => "T(vi)",
            Rule::Tvii => "T(vii)",
            Rule::Tviii => "T(viii)",
            Rule::Tix => "T(ix)",
            Rule::Tx => "T(x)",
            Rule::E1 => "E1",
            Rule::E2 => "E2",
            Rule::Ei => "E(i)",
            Rule::Eii => "E(ii)",
        }
    }

    /// Rules that rewrite a graph without applying a gate.
    pub fn is_equivalence(self) -> bool {
        matches!(self, Rule::E1 | Rule::E2 | Rule::Ei | Rule::Eii)
    }

    /// Rules that require, and preserve, a reduced graph.
    pub fn is_reduced_rule(self) -> bool {
        matches!(
            self,
            Rule::Ti
                | Rule::Tii
                | Rule::Tiii
                | Rule::Tiv
                | Rule::Tv
                | Rule::Tvi
                | Rule::Tvii
                | Rule::Tviii
                | Rule::Tix
                | Rule::Tx
                | Rule::Ei
                | Rule::Eii
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}
