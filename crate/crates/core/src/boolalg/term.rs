//! Boolean expressions over named generators.

use std::collections::BTreeSet;
use std::fmt;

/// An element of the free Boolean algebra on a set of named generators,
/// written as a syntax tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Gen(String),
    Not(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(name: impl Into<String>) -> Term {
        Term::Gen(name.into())
    }

    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn and(a: Term, b: Term) -> Term {
        Term::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Term, b: Term) -> Term {
        Term::Or(Box::new(a), Box::new(b))
    }

    /// Left-nested disjunction; the empty join is `Zero`.
    pub fn join_all<I: IntoIterator<Item = Term>>(terms: I) -> Term {
        terms
            .into_iter()
            .reduce(Term::or)
            .unwrap_or(Term::Zero)
    }

    /// Left-nested conjunction; the empty meet is `One`.
    pub fn meet_all<I: IntoIterator<Item = Term>>(terms: I) -> Term {
        terms
            .into_iter()
            .reduce(Term::and)
            .unwrap_or(Term::One)
    }

    /// Generator names occurring in the term, sorted.
    pub fn generators(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Gen(name) => {
                out.insert(name.as_str());
            }
            Term::Not(t) => t.collect_generators(out),
            Term::And(a, b) | Term::Or(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Gen(_) => 1,
            Term::Not(t) => 1 + t.size(),
            Term::And(a, b) | Term::Or(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Gen(_) => 0,
            Term::Not(t) => 1 + t.depth(),
            Term::And(a, b) | Term::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Replaces every generator by the term `images` returns for it.
    /// Generators mapped to `None` are left in place.
    pub fn substitute<F>(&self, images: &F) -> Term
    where
        F: Fn(&str) -> Option<Term>,
    {
        match self {
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Gen(name) => images(name).unwrap_or_else(|| self.clone()),
            Term::Not(t) => Term::not(t.substitute(images)),
            Term::And(a, b) => Term::and(a.substitute(images), b.substitute(images)),
            Term::Or(a, b) => Term::or(a.substitute(images), b.substitute(images)),
        }
    }

    /// Evaluates under an assignment given as a lookup; unknown generators
    /// are reported through the `Err` branch.
    pub fn eval_with<F>(&self, value: &F) -> Result<bool, String>
    where
        F: Fn(&str) -> Option<bool>,
    {
        Ok(match self {
            Term::Zero => false,
            Term::One => true,
            Term::Gen(name) => value(name).ok_or_else(|| name.clone())?,
            Term::Not(t) => !t.eval_with(value)?,
            Term::And(a, b) => a.eval_with(value)? && b.eval_with(value)?,
            Term::Or(a, b) => a.eval_with(value)? || b.eval_with(value)?,
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Or(..) => 1,
            Term::And(..) => 2,
            Term::Not(_) => 3,
            Term::Zero | Term::One | Term::Gen(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Term::Zero => f.write_str("0")?,
            Term::One => f.write_str("1")?,
            Term::Gen(name) => f.write_str(name)?,
            Term::Not(t) => {
                f.write_str("~")?;
                t.fmt_prec(f, 3)?;
            }
            Term::And(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" & ")?;
                b.fmt_prec(f, 3)?;
            }
            Term::Or(a, b) => {
                a.fmt_prec(f, 1)?;
                f.write_str(" | ")?;
                b.fmt_prec(f, 2)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Prints in the concrete syntax accepted by the term parser, with the
/// minimum of parentheses needed to parse back to the same tree.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// A term whose generators have been resolved to positions in a
/// presentation's generator list.
#[derive(Debug, Clone)]
pub(crate) enum Compiled {
    Const(bool),
    Var(usize),
    Not(Box<Compiled>),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    pub(crate) fn compile<F>(t: &Term, index_of: &F) -> Result<Compiled, String>
    where
        F: Fn(&str) -> Option<usize>,
    {
        Ok(match t {
            Term::Zero => Compiled::Const(false),
            Term::One => Compiled::Const(true),
            Term::Gen(name) => Compiled::Var(index_of(name).ok_or_else(|| name.clone())?),
            Term::Not(a) => Compiled::Not(Box::new(Compiled::compile(a, index_of)?)),
            Term::And(a, b) => Compiled::And(
                Box::new(Compiled::compile(a, index_of)?),
                Box::new(Compiled::compile(b, index_of)?),
            ),
            Term::Or(a, b) => Compiled::Or(
                Box::new(Compiled::compile(a, index_of)?),
                Box::new(Compiled::compile(b, index_of)?),
            ),
        })
    }

    /// Evaluates at one assignment; `bit(i)` is the value of generator `i`.
    pub(crate) fn eval<F: Fn(usize) -> bool + Copy>(&self, bit: F) -> bool {
        match self {
            Compiled::Const(b) => *b,
            Compiled::Var(i) => bit(*i),
            Compiled::Not(a) => !a.eval(bit),
            Compiled::And(a, b) => a.eval(bit) && b.eval(bit),
            Compiled::Or(a, b) => a.eval(bit) || b.eval(bit),
        }
    }

    /// Evaluates at 64 consecutive assignments at once. `var(i)` yields the
    /// word of values of generator `i` over that block.
    pub(crate) fn eval_word<F: Fn(usize) -> u64 + Copy>(&self, var: F) -> u64 {
        match self {
            Compiled::Const(b) => {
                if *b {
                    u64::MAX
                } else {
                    0
                }
            }
            Compiled::Var(i) => var(*i),
            Compiled::Not(a) => !a.eval_word(var),
            Compiled::And(a, b) => a.eval_word(var) & b.eval_word(var),
            Compiled::Or(a, b) => a.eval_word(var) | b.eval_word(var),
        }
    }
}
