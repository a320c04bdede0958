use std::fmt;

use super::{cs_value, BitWord, Dyadic};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionKind {
    Closed,
    /// Open in the relative topology of `[0, 1]`.
    OpenInI,
}

/// An interval with dyadic endpoints; each end is closed or open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Dyadic, hi: Dyadic) -> Interval {
        Interval { lo, hi, lo_closed: true, hi_closed: true }
    }

    /// `(lo, hi)` relative to `[0, 1]`: an end at 0 or 1 is included.
    pub fn open_in_i(lo: Dyadic, hi: Dyadic) -> Interval {
        let lo_closed = lo.is_zero();
        let hi_closed = hi == Dyadic::one();
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// A finite union of intervals, sorted and maximally merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalUnion {
    kind: UnionKind,
    parts: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty(kind: UnionKind) -> IntervalUnion {
        IntervalUnion { kind, parts: Vec::new() }
    }

    /// Union of the closed intervals `[lo, hi]`; touching parts merge.
    pub fn closed(parts: impl IntoIterator<Item = (Dyadic, Dyadic)>) -> IntervalUnion {
        let mut ps: Vec<(Dyadic, Dyadic)> = parts.into_iter().filter(|(lo, hi)| lo <= hi).collect();
        ps.sort();
        let mut merged: Vec<Interval> = Vec::new();
        for (lo, hi) in ps {
            match merged.last_mut() {
                Some(last) if lo <= last.hi => {
                    if hi > last.hi {
                        last.hi = hi;
                    }
                }
                _ => merged.push(Interval::closed(lo, hi)),
            }
        }
        IntervalUnion { kind: UnionKind::Closed, parts: merged }
    }

    /// Union of relatively open intervals `(lo, hi)`; overlapping parts and
    /// parts sharing an included end merge.
    pub fn open_in_i(parts: impl IntoIterator<Item = (Dyadic, Dyadic)>) -> IntervalUnion {
        let mut ps: Vec<Interval> = parts
            .into_iter()
            .map(|(lo, hi)| Interval::open_in_i(lo, hi))
            .filter(|i| i.lo < i.hi || (i.lo == i.hi && i.lo_closed && i.hi_closed))
            .collect();
        ps.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut merged: Vec<Interval> = Vec::new();
        for p in ps {
            match merged.last_mut() {
                Some(last) if p.lo < last.hi || (p.lo == last.hi && (p.lo_closed || last.hi_closed)) => {
                    if p.hi > last.hi || (p.hi == last.hi && p.hi_closed) {
                        last.hi = p.hi;
                        last.hi_closed = p.hi_closed;
                    }
                }
                _ => merged.push(p),
            }
        }
        IntervalUnion { kind: UnionKind::OpenInI, parts: merged }
    }

    pub fn kind(&self) -> UnionKind {
        self.kind
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.parts.iter().any(|p| p.contains(x))
    }

    /// Sorted, non-overlapping and not mergeable further.
    pub fn is_normalized(&self) -> bool {
        let ordered = self.parts.windows(2).all(|w| match self.kind {
            UnionKind::Closed => w[0].hi < w[1].lo,
            UnionKind::OpenInI => w[0].hi <= w[1].lo && !(w[0].hi == w[1].lo && (w[0].hi_closed || w[1].lo_closed)),
        });
        let proper = self.parts.iter().all(|p| match self.kind {
            UnionKind::Closed => p.lo <= p.hi && p.lo_closed && p.hi_closed,
            UnionKind::OpenInI => {
                p.lo < p.hi && p.lo_closed == p.lo.is_zero() && p.hi_closed == (p.hi == Dyadic::one())
            }
        });
        ordered && proper
    }

    /// Minimum distance between consecutive parts, if there are at least two.
    pub fn min_gap(&self) -> Option<Dyadic> {
        self.parts.windows(2).map(|w| &w[1].lo - &w[0].hi).min()
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.parts.iter().map(Interval::to_string).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}

/// `[cs(w), cs(w) + 1/2^|w|]`, the image of the cylinder of `w`.
pub fn cylinder_image(w: &BitWord) -> IntervalUnion {
    let lo = cs_value(w);
    let hi = &lo + &Dyadic::unit(w.len() as u32);
    IntervalUnion::closed([(lo, hi)])
}

/// Image of a finite union of cylinders.
pub fn decidable_image(ws: &[BitWord]) -> IntervalUnion {
    IntervalUnion::closed(ws.iter().map(|w| {
        let lo = cs_value(w);
        let hi = &lo + &Dyadic::unit(w.len() as u32);
        (lo, hi)
    }))
}

/// Complement in `[0, 1]` of a closed union, as relatively open parts.
pub fn complement_closed_union(u: &IntervalUnion) -> IntervalUnion {
    let zero = Dyadic::zero();
    let one = Dyadic::one();
    let mut parts = Vec::new();
    let mut cursor: Option<Dyadic> = None; // right end of the previous closed part
    for p in u.parts() {
        let lo = p.lo.clone().max(zero.clone());
        match &cursor {
            None if lo > zero => parts.push(Interval { lo: zero.clone(), hi: lo, lo_closed: true, hi_closed: false }),
            Some(c) if lo > *c => parts.push(Interval { lo: c.clone(), hi: lo, lo_closed: false, hi_closed: false }),
            _ => {}
        }
        cursor = Some(p.hi.clone().min(one.clone()));
    }
    match cursor {
        None => parts.push(Interval::closed(zero, one)),
        Some(c) if c < one => parts.push(Interval { lo: c, hi: one, lo_closed: false, hi_closed: true }),
        _ => {}
    }
    IntervalUnion { kind: UnionKind::OpenInI, parts }
}

/// Complement in `[0, 1]` of a relatively open union, as closed parts.
pub fn complement_open_union(u: &IntervalUnion) -> IntervalUnion {
    let zero = Dyadic::zero();
    let one = Dyadic::one();
    let mut parts = Vec::new();
    // left end of the next gap, and whether it is still available
    let mut cursor = Some(zero);
    for p in u.parts() {
        if let Some(c) = cursor.take() {
            if !p.lo_closed && c <= p.lo {
                parts.push((c, p.lo.clone()));
            }
        }
        if !p.hi_closed {
            cursor = Some(p.hi.clone());
        }
    }
    if let Some(c) = cursor {
        if c <= one {
            parts.push((c, one));
        }
    }
    IntervalUnion::closed(parts)
}
