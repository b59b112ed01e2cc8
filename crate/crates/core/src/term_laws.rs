//! Named registry of pointwise term laws.
//!
//! Every law here is an identity or conditional identity between term
//! evaluations, universally quantified over element tuples of a fixed arity.
//! Checking a law means replaying it on every tuple of the carrier; the
//! lexicographically smallest falsifying tuples (up to [`WITNESS_CAP`]) are
//! recorded as witnesses.
//!
//! Keeping the laws in one table lets the statement suite iterate them
//! generically and keeps the validator, the structure checks and the suite
//! in agreement about what each label means.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;

/// Maximum number of falsifying tuples retained per law.
pub const WITNESS_CAP: usize = 10;

/// A pointwise law: an identity quantified over `arity` elements.
pub struct TermLaw {
    pub id: &'static str,
    /// The defining identity, in the notation used throughout the crate
    /// (`*` involution, `⋓`/`⋒` the derived join/meet, `C` commutation).
    pub formula: &'static str,
    pub arity: usize,
    pub eval: fn(&FiniteAlgebra, &[usize]) -> bool,
}

/// Verdict of replaying one law on one algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    /// Lexicographically smallest falsifying tuples, capped.
    pub witnesses: Vec<Vec<usize>>,
}

impl LawReport {
    pub fn first_witness(&self) -> Option<&[usize]> {
        self.witnesses.first().map(|w| w.as_slice())
    }
}

/// Replays `law` on every tuple of `alg`, collecting up to `cap` witnesses.
pub fn check_with_cap(alg: &FiniteAlgebra, law: &TermLaw, cap: usize) -> LawReport {
    let n = alg.size();
    let mut witnesses = Vec::new();
    let mut tuple = vec![0usize; law.arity];
    'outer: loop {
        if !(law.eval)(alg, &tuple) {
            witnesses.push(tuple.clone());
            if witnesses.len() >= cap {
                break;
            }
        }
        // advance odometer, most significant digit first so the scan order
        // is lexicographic
        let mut k = law.arity;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < n {
                break;
            }
            tuple[k] = 0;
        }
        if law.arity == 0 {
            break;
        }
    }
    LawReport {
        law: law.id.to_string(),
        holds: witnesses.is_empty(),
        witnesses,
    }
}

pub fn check(alg: &FiniteAlgebra, law: &TermLaw) -> LawReport {
    check_with_cap(alg, law, WITNESS_CAP)
}

/// Looks a law up by id; panics on unknown ids (registry is static).
pub fn find(id: &str) -> &'static TermLaw {
    TERM_LAWS
        .iter()
        .find(|l| l.id == id)
        .unwrap_or_else(|| panic!("unknown term law id {id:?}"))
}

pub fn check_id(alg: &FiniteAlgebra, id: &str) -> LawReport {
    check(alg, find(id))
}

macro_rules! law {
    ($id:literal, $formula:literal, $arity:literal, |$a:ident, $t:ident| $body:expr) => {
        TermLaw {
            id: $id,
            formula: $formula,
            arity: $arity,
            eval: |$a: &FiniteAlgebra, $t: &[usize]| -> bool { $body },
        }
    };
}

/// The full law table. Axioms first, then derived laws in catalog order.
pub static TERM_LAWS: &[TermLaw] = &[
    // structural axioms
    law!("BE1", "x→x = 1", 1, |a, t| a.imp(t[0], t[0]) == a.one()),
    law!("BE2", "x→1 = 1", 1, |a, t| a.imp(t[0], a.one()) == a.one()),
    law!("BE3", "1→x = x", 1, |a, t| a.imp(a.one(), t[0]) == t[0]),
    law!("BE4", "x→(y→z) = y→(x→z)", 3, |a, t| {
        a.imp(t[0], a.imp(t[1], t[2])) == a.imp(t[1], a.imp(t[0], t[2]))
    }),
    law!("BOUND", "0→x = 1", 1, |a, t| a.imp(a.zero(), t[0]) == a.one()),
    law!("INV", "x** = x", 1, |a, t| a.star(a.star(t[0])) == t[0]),
    law!("IMPL", "(x→y)→x = x", 2, |a, t| {
        a.imp(a.imp(t[0], t[1]), t[0]) == t[0]
    }),
    // consequences of implicativity
    law!("iG", "x*→x = x", 1, |a, t| a.imp(a.star(t[0]), t[0]) == t[0]),
    law!("iG'", "x→x* = x*", 1, |a, t| {
        a.imp(t[0], a.star(t[0])) == a.star(t[0])
    }),
    law!("IABS", "(x→(x→y))→x = x", 2, |a, t| {
        a.imp(a.imp(t[0], a.imp(t[0], t[1])), t[0]) == t[0]
    }),
    law!("PIMPL", "x→(x→y) = x→y", 2, |a, t| {
        a.imp(t[0], a.imp(t[0], t[1])) == a.imp(t[0], t[1])
    }),
    // basic BE-algebra identities
    law!("L2.1(1)", "x→(y→x) = 1", 2, |a, t| {
        a.imp(t[0], a.imp(t[1], t[0])) == a.one()
    }),
    law!("L2.1(2)", "x ≤ (x→y)→y", 2, |a, t| a.le(t[0], a.cup(t[0], t[1]))),
    law!("L2.1(3)", "x→y* = y→x*", 2, |a, t| {
        a.imp(t[0], a.star(t[1])) == a.imp(t[1], a.star(t[0]))
    }),
    law!("L2.1(4)", "x ≤ x**", 1, |a, t| a.le(t[0], a.star(a.star(t[0])))),
    law!("L2.1(5)", "x*→y = y*→x", 2, |a, t| {
        a.imp(a.star(t[0]), t[1]) == a.imp(a.star(t[1]), t[0])
    }),
    law!("L2.1(6)", "x*→y* = y→x", 2, |a, t| {
        a.imp(a.star(t[0]), a.star(t[1])) == a.imp(t[1], t[0])
    }),
    law!("L2.1(7)", "(x→y)*→z = x→(y*→z)", 3, |a, t| {
        a.imp(a.star(a.imp(t[0], t[1])), t[2]) == a.imp(t[0], a.imp(a.star(t[1]), t[2]))
    }),
    law!("L2.1(8)", "x→(y→z) = (x→y*)*→z", 3, |a, t| {
        a.imp(t[0], a.imp(t[1], t[2])) == a.imp(a.star(a.imp(t[0], a.star(t[1]))), t[2])
    }),
    law!(
        "L2.1(9)",
        "(x*→y)*→(x*→y) = (x*→x)*→(y*→y)",
        2,
        |a, t| {
            let u = a.imp(a.star(t[0]), t[1]);
            let l = a.imp(a.star(u), u);
            let r = a.imp(
                a.star(a.imp(a.star(t[0]), t[0])),
                a.imp(a.star(t[1]), t[1]),
            );
            l == r
        }
    ),
    // orthomodularity conditions
    law!("IOM", "x⋒(y→x) = x", 2, |a, t| {
        a.cap(t[0], a.imp(t[1], t[0])) == t[0]
    }),
    law!("IOM'", "x⋒(x*→y) = x", 2, |a, t| {
        a.cap(t[0], a.imp(a.star(t[0]), t[1])) == t[0]
    }),
    law!("IOM''", "x⋓(x→y)* = x", 2, |a, t| {
        a.cup(t[0], a.star(a.imp(t[0], t[1]))) == t[0]
    }),
    law!("QW", "x→((x⋒y)⋒(z⋒x)) = (x→y)⋒(x→z)", 3, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        a.imp(x, a.cap(a.cap(x, y), a.cap(z, x))) == a.cap(a.imp(x, y), a.imp(x, z))
    }),
    law!("QW1", "x→(x⋒y) = x→y", 2, |a, t| {
        a.imp(t[0], a.cap(t[0], t[1])) == a.imp(t[0], t[1])
    }),
    law!("QW2", "x→(y⋒(z⋒x)) = (x→y)⋒(x→z)", 3, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        a.imp(x, a.cap(y, a.cap(z, x))) == a.cap(a.imp(x, y), a.imp(x, z))
    }),
    law!("CUPCOMM", "x⋓y = y⋓x", 2, |a, t| {
        a.cup(t[0], t[1]) == a.cup(t[1], t[0])
    }),
    // order-relation lemmas
    law!("L2.5(1)", "x≤_L y iff y*≤_L x*", 2, |a, t| {
        a.le_l(t[0], t[1]) == a.le_l(a.star(t[1]), a.star(t[0]))
    }),
    law!("L2.5(2)", "x≤_Q y implies x≤_L y", 2, |a, t| {
        !a.le_q(t[0], t[1]) || a.le_l(t[0], t[1])
    }),
    law!("L2.5(3)", "x ≤_L y→x and x* ≤_L x→y", 2, |a, t| {
        a.le_l(t[0], a.imp(t[1], t[0])) && a.le_l(a.star(t[0]), a.imp(t[0], t[1]))
    }),
    law!("P2.2(1)", "x≤_Q y implies x = y⋒x and y = x⋓y", 2, |a, t| {
        !a.le_q(t[0], t[1]) || (a.cap(t[1], t[0]) == t[0] && a.cup(t[0], t[1]) == t[1])
    }),
    law!("P2.2(2)", "≤_Q reflexive and antisymmetric", 2, |a, t| {
        a.le_q(t[0], t[0])
            && a.le_q(t[1], t[1])
            && !(a.le_q(t[0], t[1]) && a.le_q(t[1], t[0]) && t[0] != t[1])
    }),
    law!("P2.2(3)", "x⋒y = (x*⋓y*)* and x⋓y = (x*⋒y*)*", 2, |a, t| {
        a.cap(t[0], t[1]) == a.star(a.cup(a.star(t[0]), a.star(t[1])))
            && a.cup(t[0], t[1]) == a.star(a.cap(a.star(t[0]), a.star(t[1])))
    }),
    law!("P2.2(4)", "x≤_Q y implies x≤y", 2, |a, t| {
        !a.le_q(t[0], t[1]) || a.le(t[0], t[1])
    }),
    law!(
        "P2.2(5)",
        "x,y ≤_Q z and z→x=z→y imply x=y",
        3,
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !(a.le_q(x, z) && a.le_q(y, z) && a.imp(z, x) == a.imp(z, y)) || x == y
        }
    ),
    law!("P2.2(6)", "x≤_L y implies x≤y", 2, |a, t| {
        !a.le_l(t[0], t[1]) || a.le(t[0], t[1])
    }),
    law!("P2.2(7)", "≤_L is an order relation", 3, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        a.le_l(x, x)
            && !(a.le_l(x, y) && a.le_l(y, x) && x != y)
            && (!(a.le_l(x, y) && a.le_l(y, z)) || a.le_l(x, z))
    }),
    // IOML propositions
    law!("P2.8(1)", "x⋒(y⋓x) = x and x⋓(y⋒x) = x", 2, |a, t| {
        a.cap(t[0], a.cup(t[1], t[0])) == t[0] && a.cup(t[0], a.cap(t[1], t[0])) == t[0]
    }),
    law!(
        "P2.8(2)",
        "x≤_Q y implies y⋓x = y and y*≤_Q x*",
        2,
        |a, t| {
            !a.le_q(t[0], t[1])
                || (a.cup(t[1], t[0]) == t[1] && a.le_q(a.star(t[1]), a.star(t[0])))
        }
    ),
    law!(
        "P2.8(3)",
        "x≤_Q y implies y→z ≤_Q x→z and z→x ≤_Q z→y",
        3,
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !a.le_q(x, y)
                || (a.le_q(a.imp(y, z), a.imp(x, z)) && a.le_q(a.imp(z, x), a.imp(z, y)))
        }
    ),
    law!(
        "P2.8(4)",
        "x≤_Q y implies x⋒z ≤_Q y⋒z and x⋓z ≤_Q y⋓z",
        3,
        |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !a.le_q(x, y) || (a.le_q(a.cap(x, z), a.cap(y, z)) && a.le_q(a.cup(x, z), a.cup(y, z)))
        }
    ),
    law!("P2.9(1)", "x→(y⋒x) = x→y", 2, |a, t| {
        a.imp(t[0], a.cap(t[1], t[0])) == a.imp(t[0], t[1])
    }),
    law!("P2.9(2)", "(x⋓y)→(x→y)* = y*", 2, |a, t| {
        a.imp(a.cup(t[0], t[1]), a.star(a.imp(t[0], t[1]))) == a.star(t[1])
    }),
    law!("P2.9(3)", "x⋒((y→x)⋒(z→x)) = x", 3, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        a.cap(x, a.cap(a.imp(y, x), a.imp(z, x))) == x
    }),
    law!("P2.9(4)", "(x→y)→(y⋒x) = x", 2, |a, t| {
        a.imp(a.imp(t[0], t[1]), a.cap(t[1], t[0])) == t[0]
    }),
    law!("P2.9(5)", "≤_Q is an order relation", 3, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        a.le_q(x, x)
            && !(a.le_q(x, y) && a.le_q(y, x) && x != y)
            && (!(a.le_q(x, y) && a.le_q(y, z)) || a.le_q(x, z))
    }),
    law!("P2.9(6)", "x≤_Q y and y≤x imply x=y", 2, |a, t| {
        !(a.le_q(t[0], t[1]) && a.le(t[1], t[0])) || t[0] == t[1]
    }),
    law!("P2.9(7a)", "x⋒y ≤_Q y ≤_Q x⋓y", 2, |a, t| {
        a.le_q(a.cap(t[0], t[1]), t[1]) && a.le_q(t[1], a.cup(t[0], t[1]))
    }),
    law!("P2.9(7b)", "(x⋒y)→(y⋒x) = 1", 2, |a, t| {
        a.imp(a.cap(t[0], t[1]), a.cap(t[1], t[0])) == a.one()
    }),
    law!("P2.9(8)", "(x⋓y)→(y⋓x) = 1", 2, |a, t| {
        a.imp(a.cup(t[0], t[1]), a.cup(t[1], t[0])) == a.one()
    }),
    law!("T2.11(b)", "x≤_L y implies x≤_Q y", 2, |a, t| {
        !a.le_l(t[0], t[1]) || a.le_q(t[0], t[1])
    }),
    law!("T2.11(c)", "x≤_L y implies y = y⋓x", 2, |a, t| {
        !a.le_l(t[0], t[1]) || a.cup(t[1], t[0]) == t[1]
    }),
    law!("T2.11cons", "≤_Q = ≤_L", 2, |a, t| {
        a.le_q(t[0], t[1]) == a.le_l(t[0], t[1])
    }),
    // commutation
    law!(
        "P2.13(1)",
        "xCx, xC0, 0Cx, xC1, 1Cx, xCx*, x*Cx",
        1,
        |a, t| {
            let x = t[0];
            a.commutes(x, x)
                && a.commutes(x, a.zero())
                && a.commutes(a.zero(), x)
                && a.commutes(x, a.one())
                && a.commutes(a.one(), x)
                && a.commutes(x, a.star(x))
                && a.commutes(a.star(x), x)
        }
    ),
    law!("P2.13(2)", "x≤_L y or x≤_L y* implies xCy", 2, |a, t| {
        !(a.le_l(t[0], t[1]) || a.le_l(t[0], a.star(t[1]))) || a.commutes(t[0], t[1])
    }),
    law!("P2.13(3)", "x≤_Q y or x≤_Q y* implies xCy", 2, |a, t| {
        !(a.le_q(t[0], t[1]) || a.le_q(t[0], a.star(t[1]))) || a.commutes(t[0], t[1])
    }),
    law!("P2.13(4)", "xC(y→x)", 2, |a, t| {
        a.commutes(t[0], a.imp(t[1], t[0]))
    }),
    law!(
        "P2.13(5)",
        "xCy implies xCy*, x*Cy, x*Cy*",
        2,
        |a, t| {
            !a.commutes(t[0], t[1])
                || (a.commutes(t[0], a.star(t[1]))
                    && a.commutes(a.star(t[0]), t[1])
                    && a.commutes(a.star(t[0]), a.star(t[1])))
        }
    ),
    law!(
        "T2.14",
        "xCy and xCz imply (x,y,z) distributive",
        3,
        |a, t| {
            !(a.commutes(t[0], t[1]) && a.commutes(t[0], t[2]))
                || a.distributive_triple(t[0], t[1], t[2])
        }
    ),
];

/// The axioms replayed by `FiniteAlgebra::validate`, in validation order.
pub const VALIDATION_LAWS: &[&str] = &["BE1", "BE2", "BE3", "BE4", "BOUND", "INV", "IMPL"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for law in TERM_LAWS {
            assert!(seen.insert(law.id), "duplicate law id {}", law.id);
        }
    }

    #[test]
    fn find_panics_on_unknown() {
        let err = std::panic::catch_unwind(|| find("NOPE"));
        assert!(err.is_err());
    }
}
