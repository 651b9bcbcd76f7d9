#![allow(dead_code)]

use foldbound::{BoundarySystem, FoldingSystem};

/// A folding rule together with reference values for its boundary rule, in
/// the order L, R, l, r, S, s.
#[derive(Debug)]
pub struct Reference {
    pub name: &'static str,
    pub sigma: &'static str,
    pub tau: [&'static str; 6],
}

impl Reference {
    pub fn system(&self) -> FoldingSystem {
        FoldingSystem::parse(self.sigma).unwrap()
    }
}

pub const KEYS: [char; 6] = ['L', 'R', 'l', 'r', 'S', 's'];

pub const HEIGHWAY: Reference = Reference {
    name: "heighway",
    sigma: "A-B",
    tau: ["Ll", "S", "S", "Rr", "Lr", "Rl"],
};

pub const FOLD5A: Reference = Reference {
    name: "fold5a",
    sigma: "A-B+A-B+A+B-A+B+A",
    tau: ["LsrR", "SSRsrR", "lLslSS", "lLsr", "SSS", "lLslSRsrR"],
};

pub const FOLD9: Reference = Reference {
    name: "fold9",
    sigma: "B+A-B-A+B+A+B-A+B+A-B-A-B+A-B+A+B",
    tau: [
        "rLsr",
        "rLrRslRr",
        "LlRslLrL",
        "LsrL",
        "rLrRslLrL",
        "LlRslRr",
    ],
};

pub const FOLD10: Reference = Reference {
    name: "fold10",
    sigma: "B+A+B-A-B-A+B+A+B-A",
    tau: ["rLs", "rSRs", "slSL", "srL", "rSSL", "slRs"],
};

pub const FOLD8: Reference = Reference {
    name: "fold8",
    sigma: "A+B-A-B+A+B+A-B",
    tau: ["SS", "RlRrS", "SLlRl", "SS", "RlRl", "SLlRrS"],
};

/// The reference `r` entry here, "rRL", breaks the parity alternation law;
/// the derived value is "rRl".
pub const FOLD5B: Reference = Reference {
    name: "fold5b",
    sigma: "A+B+A-B-A",
    tau: ["RlL", "RrL", "rLl", "rRL", "Rsl", "rSL"],
};

/// The three systems of the first reference table.
pub const FIRST_TABLE: [&Reference; 3] = [&HEIGHWAY, &FOLD5A, &FOLD9];

/// The three systems of the second reference table.
pub const SECOND_TABLE: [&Reference; 3] = [&FOLD10, &FOLD8, &FOLD5B];

pub const ALL: [&Reference; 6] = [&HEIGHWAY, &FOLD5A, &FOLD9, &FOLD10, &FOLD8, &FOLD5B];

/// The short self-avoiding folding rules whose derivation breaks down: each
/// turns the same way throughout, so the straight or side words run into a
/// reverse at an end of the word.
pub const UNDERIVABLE: [&str; 8] = [
    "A-B-A", "A+B+A", "B-A-B", "B+A+B", "A-B-A-B", "A+B+A+B", "B-A-B-A", "B+A+B+A",
];

/// Entries of `tau` that differ from the reference, as (key, reference, derived).
pub fn differences(r: &Reference, tau: &BoundarySystem) -> Vec<(char, String, String)> {
    tau.entries()
        .zip(r.tau)
        .filter(|((_, w), expected)| w.to_string() != *expected)
        .map(|((k, w), expected)| (k, expected.to_string(), w.to_string()))
        .collect()
}
