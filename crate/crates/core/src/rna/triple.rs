use std::fmt;

use crate::error::{Error, Result};

/// Closed integer interval `[l, r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub l: usize,
    pub r: usize,
}

impl Span {
    pub fn new(l: usize, r: usize) -> Self {
        Span { l, r }
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        self.l <= other.l && other.r <= self.r
    }

    /// Contained in `self` without touching either endpoint.
    pub fn strictly_contains(&self, other: &Span) -> bool {
        self.l < other.l && other.r < self.r
    }

    pub fn disjoint(&self, other: &Span) -> bool {
        self.r < other.l || other.r < self.l
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.l, self.r)
    }
}

/// Pseudo-interval triple `(I, H, L)`; `light == None` is the empty `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub outer: Span,
    pub heavy: Span,
    pub light: Option<Span>,
}

impl Triple {
    pub fn new(outer: Span, heavy: Span, light: Option<Span>) -> Self {
        Triple { outer, heavy, light }
    }

    /// Conditions (a)-(d): proper `I` and `H`, `H` and `L` strictly inside `I`,
    /// `H` and `L` disjoint. A nonempty `L` must also be proper.
    pub fn is_well_ordered(&self) -> bool {
        let (i, h) = (self.outer, self.heavy);
        i.l < i.r
            && h.l < h.r
            && i.strictly_contains(&h)
            && self.light.is_none_or(|l| l.l < l.r && i.strictly_contains(&l) && h.disjoint(&l))
    }

    /// The pair this triple's list decodes to when it is last.
    pub fn target(&self) -> Span {
        self.light.unwrap_or(self.heavy)
    }

    pub fn endpoints(&self) -> impl Iterator<Item = usize> {
        let l = self.light.map(|s| [s.l, s.r]);
        [self.outer.l, self.outer.r, self.heavy.l, self.heavy.r].into_iter().chain(l.into_iter().flatten())
    }
}

/// `t ≼ u`.
pub fn triple_preceq(t: &Triple, u: &Triple) -> bool {
    if t == u || t.heavy.contains_span(&u.outer) {
        return true;
    }
    if t.outer != u.outer || t.heavy != u.heavy {
        return false;
    }
    match (t.light, u.light) {
        (None, _) => true,
        (Some(a), Some(b)) => a.r < b.l,
        (Some(_), None) => false,
    }
}

/// A graph vertex: a list of triples, each nested in its predecessor's `L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleListVertex(pub Vec<Triple>);

impl TripleListVertex {
    pub fn triples(&self) -> &[Triple] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<&Triple> {
        self.0.last()
    }

    /// The pair this vertex decodes to.
    pub fn target(&self) -> Option<Span> {
        self.last().map(Triple::target)
    }

    /// Flattened endpoints, six per triple, `-1` for an empty `L`.
    pub fn label(&self) -> Vec<i64> {
        self.0
            .iter()
            .flat_map(|t| {
                let (a, b) = t.light.map_or((-1, -1), |s| (s.l as i64, s.r as i64));
                [t.outer.l as i64, t.outer.r as i64, t.heavy.l as i64, t.heavy.r as i64, a, b]
            })
            .collect()
    }

    /// Whether some interval of some triple has `i` as an endpoint.
    pub fn touches(&self, i: usize) -> bool {
        self.0.iter().any(|t| t.endpoints().any(|e| e == i))
    }
}

/// Strict lexicographic order, triples compared by `≼`. A proper prefix is
/// smaller. Errors when the first differing triples are incomparable.
pub fn vertex_lex_lt(v: &TripleListVertex, w: &TripleListVertex) -> Result<bool> {
    match v.0.iter().zip(&w.0).position(|(a, b)| a != b) {
        None => Ok(v.len() < w.len()),
        Some(j) => {
            if triple_preceq(&v.0[j], &w.0[j]) {
                Ok(true)
            } else if triple_preceq(&w.0[j], &v.0[j]) {
                Ok(false)
            } else {
                Err(Error::IncomparableTriples(j))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(l: usize, r: usize) -> Span {
        Span::new(l, r)
    }

    #[test]
    fn preceq_bullets() {
        let t = Triple::new(s(0, 9), s(2, 6), Some(s(7, 8)));
        assert!(triple_preceq(&t, &t));
        let inner = Triple::new(s(3, 6), s(4, 5), None);
        assert!(triple_preceq(&t, &inner));
        let a = Triple::new(s(0, 9), s(7, 8), Some(s(2, 3)));
        let b = Triple::new(s(0, 9), s(7, 8), Some(s(5, 6)));
        assert!(triple_preceq(&a, &b));
        assert!(!triple_preceq(&b, &a));
        let e = Triple::new(s(0, 9), s(7, 8), None);
        assert!(triple_preceq(&e, &a));
        assert!(!triple_preceq(&a, &e));
    }

    #[test]
    fn lex_prefix_rule() {
        let t = Triple::new(s(0, 9), s(1, 2), Some(s(3, 8)));
        let u = Triple::new(s(3, 8), s(4, 5), None);
        let v = TripleListVertex(vec![t]);
        let w = TripleListVertex(vec![t, u]);
        assert!(vertex_lex_lt(&v, &w).unwrap());
        assert!(!vertex_lex_lt(&w, &v).unwrap());
        assert!(!vertex_lex_lt(&v, &v).unwrap());
    }

    #[test]
    fn incomparable_first_difference() {
        let a = TripleListVertex(vec![Triple::new(s(0, 9), s(1, 2), None)]);
        let b = TripleListVertex(vec![Triple::new(s(0, 9), s(3, 4), None)]);
        assert!(matches!(vertex_lex_lt(&a, &b), Err(Error::IncomparableTriples(0))));
    }
}
