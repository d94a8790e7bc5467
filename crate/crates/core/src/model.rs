//! Domain types: graphs, vertex labelings, pair systems and sequence forms,
//! plus the conversions and text encodings between them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex and edge labels. Every label the crate produces fits comfortably
/// in 64 bits; sums in identities are widened to `i128`.
pub type Label = i64;

/// A finite simple undirected graph on vertices `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. Isolated vertices are allowed.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 1..={vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            out.push((u, v));
        }
        Ok(Self {
            vertex_count,
            edges: out,
        })
    }

    /// `nK2`: component `i` joins vertices `2i-1` and `2i`.
    pub fn disjoint_edges(n: usize) -> Self {
        Self {
            vertex_count: 2 * n,
            edges: (1..=n).map(|i| (2 * i - 1, 2 * i)).collect(),
        }
    }

    /// The path `1 - 2 - ... - p`.
    pub fn path(p: usize) -> Self {
        Self {
            vertex_count: p,
            edges: (1..p).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.vertex_count
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Parses the edge-list format: a `p <int>` header line followed by one
    /// `u v` line per edge. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .enumerate()
            .filter(|(_, l)| !l.is_empty());

        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::ParseError("empty edge list".into()))?;
        let p = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["p", count] => count
                .parse::<usize>()
                .map_err(|_| Error::ParseError(format!("bad vertex count {count:?}")))?,
            _ => {
                return Err(Error::ParseError(format!(
                    "expected header \"p <int>\", found {header:?}"
                )))
            }
        };

        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<_> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                _ => None,
            };
            let edge = parsed.ok_or_else(|| {
                Error::ParseError(format!("line {}: expected \"u v\", found {line:?}", lineno + 1))
            })?;
            edges.push(edge);
        }
        Self::new(p, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.vertex_count);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The arithmetic-progression target `{k, k+d, ..., k+(q-1)d}` for edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TargetParams {
    k: Label,
    d: Label,
    q: usize,
}

impl TargetParams {
    pub fn new(k: Label, d: Label, q: usize) -> Result<Self> {
        if k < 1 || d < 1 {
            return Err(Error::InvalidParams(format!(
                "k and d must be positive, got k = {k}, d = {d}"
            )));
        }
        Ok(Self { k, d, q })
    }

    pub fn k(&self) -> Label {
        self.k
    }

    pub fn d(&self) -> Label {
        self.d
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Position of `x` in the progression, if it belongs to it.
    pub fn index_of(&self, x: Label) -> Option<usize> {
        if x < self.k || (x - self.k) % self.d != 0 {
            return None;
        }
        let j = ((x - self.k) / self.d) as usize;
        (j < self.q).then_some(j)
    }
}

/// `{1, ..., p-1, p+1}`, ascending.
pub fn target_label_set(p: usize) -> Result<Vec<Label>> {
    if p < 2 {
        return Err(Error::DegenerateOrder(p));
    }
    let p = p as Label;
    Ok((1..p).chain(std::iter::once(p + 1)).collect())
}

/// `[k, k+d, ..., k+(q-1)d]`, ascending.
pub fn edge_target_set(t: &TargetParams) -> Vec<Label> {
    (0..t.q as Label).map(|j| t.k + j * t.d).collect()
}

/// `f(v)` for each vertex `v = 1..=p`, stored at index `v - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabeling(Vec<Label>);

impl VertexLabeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Self(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Label of the 1-based vertex `v`.
    pub fn get(&self, v: usize) -> Label {
        self.0[v - 1]
    }

    pub(crate) fn check_shape(&self, g: &Graph) -> Result<()> {
        if self.0.len() != g.order() {
            return Err(Error::ShapeMismatch {
                labels: self.0.len(),
                vertices: g.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for VertexLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The multiset `{|f(u) - f(v)| : uv in E}` in edge order.
pub fn induced_edge_labels(g: &Graph, f: &VertexLabeling) -> Result<Vec<Label>> {
    f.check_shape(g)?;
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| (f.get(u) - f.get(v)).abs())
        .collect())
}

/// A labeling of `nK2` given as its `n` endpoint pairs `(a_i, b_i)`, stored
/// with `a_i < b_i`. The list order is the component order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSystem {
    pairs: Vec<(Label, Label)>,
}

impl PairSystem {
    /// Normalizes each pair to `(min, max)` and checks that all `2n` values
    /// are positive and distinct.
    pub fn new(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        if pairs.is_empty() {
            return Err(Error::InvalidPairs(
                "a pair system needs at least one pair".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &pairs {
            if a < 1 {
                return Err(Error::InvalidPairs(format!("label {a} is not positive")));
            }
            for x in [a, b] {
                if !seen.insert(x) {
                    return Err(Error::InvalidPairs(format!("label {x} is used twice")));
                }
            }
        }
        Ok(Self { pairs })
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Label, Label)] {
        &self.pairs
    }

    /// `b_i - a_i` in component order.
    pub fn differences(&self) -> Vec<Label> {
        self.pairs.iter().map(|(a, b)| b - a).collect()
    }

    /// The same pair set sorted by smaller element, the canonical form used
    /// by the search engine.
    pub fn canonical(&self) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.sort_unstable();
        Self { pairs }
    }

    /// The pair system as a labeling of [`Graph::disjoint_edges`]`(n)`.
    pub fn to_labeling(&self) -> (Graph, VertexLabeling) {
        let labels = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        (Graph::disjoint_edges(self.n()), VertexLabeling::new(labels))
    }

    /// Parses `"a-b a-b ..."`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let pairs = text
            .split_whitespace()
            .map(|tok| {
                tok.split_once('-')
                    .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                    .ok_or_else(|| Error::ParseError(format!("expected \"a-b\", found {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pairs)
    }

    pub fn to_record(&self, k: Label, d: Label) -> PairRecord {
        PairRecord {
            n: self.n(),
            k,
            d,
            pairs: self.pairs.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl fmt::Display for PairSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

/// JSON form of a pair system together with its target parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub n: usize,
    pub k: Label,
    pub d: Label,
    pub pairs: Vec<[Label; 2]>,
}

impl PairRecord {
    pub fn to_pairs(&self) -> Result<PairSystem> {
        if self.n != self.pairs.len() {
            return Err(Error::InvalidPairs(format!(
                "record declares n = {} but lists {} pairs",
                self.n,
                self.pairs.len()
            )));
        }
        PairSystem::new(self.pairs.iter().map(|&[a, b]| (a, b)))
    }
}

/// JSON form of a labeling of an arbitrary graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphLabelingRecord {
    pub p: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<Label>,
    pub k: Label,
    pub d: Label,
}

impl GraphLabelingRecord {
    pub fn to_parts(&self) -> Result<(Graph, VertexLabeling)> {
        let g = Graph::new(self.p, self.edges.iter().map(|&[u, v]| (u, v)))?;
        Ok((g, VertexLabeling::new(self.labels.clone())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Length `2m`, values `1..=m`.
    Skolem,
    /// Length `2m+1`, hook at position `2m`, values `1..=m`.
    HookedSkolem,
    /// Length `2m+1`, hook at position `2m`, values `d..=d+m-1`.
    Hooked { d: Label },
}

impl SequenceKind {
    pub fn is_hooked(&self) -> bool {
        !matches!(self, SequenceKind::Skolem)
    }

    /// Smallest value the kind uses.
    pub fn first_value(&self) -> Label {
        match *self {
            SequenceKind::Hooked { d } => d,
            _ => 1,
        }
    }

    /// Sequence length for order `m`.
    pub fn length(&self, m: usize) -> usize {
        if self.is_hooked() {
            2 * m + 1
        } else {
            2 * m
        }
    }

    /// The occupied positions for order `m`: `1..=2m`, or `1..=2m-1` plus
    /// `2m+1` for the hooked kinds.
    pub fn positions(&self, m: usize) -> Vec<usize> {
        if self.is_hooked() {
            (1..2 * m).chain(std::iter::once(2 * m + 1)).collect()
        } else {
            (1..=2 * m).collect()
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Skolem => f.write_str("skolem"),
            SequenceKind::HookedSkolem => f.write_str("hooked-skolem"),
            SequenceKind::Hooked { d } => write!(f, "hooked(d={d})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Value(Label),
    Hook,
}

/// A position-indexed sequence. Only the token shape is enforced here;
/// multiplicities, hook placement and distances are checked by
/// [`crate::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceForm {
    kind: SequenceKind,
    slots: Vec<Slot>,
}

impl SequenceForm {
    pub fn new(kind: SequenceKind, slots: Vec<Slot>) -> Self {
        Self { kind, slots }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// `m` such that the length is `2m` (plain) or `2m+1` (hooked), rounding down.
    pub fn order(&self) -> usize {
        self.slots.len() / 2
    }

    /// Slot at the 1-based position `i`.
    pub fn slot(&self, i: usize) -> Slot {
        self.slots[i - 1]
    }

    /// 1-based positions holding a hook.
    pub fn hook_positions(&self) -> Vec<usize> {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Slot::Hook)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// For each value, the ascending list of 1-based positions it occupies.
    pub fn occurrences(&self) -> BTreeMap<Label, Vec<usize>> {
        let mut occ: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
        for (i, s) in self.slots.iter().enumerate() {
            if let Slot::Value(v) = *s {
                occ.entry(v).or_default().push(i + 1);
            }
        }
        occ
    }
}

impl fmt::Display for SequenceForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match s {
                Slot::Value(v) => write!(f, "{v}")?,
                Slot::Hook => f.write_str("*")?,
            }
        }
        Ok(())
    }
}

/// Places each pair's difference at both of its positions, with a hook at
/// position `2n` for the hooked kinds. The values of `ps` must be exactly
/// the kind's position set.
pub fn pairs_to_sequence(ps: &PairSystem, kind: SequenceKind) -> Result<SequenceForm> {
    let n = ps.n();
    let expected: BTreeSet<Label> = kind.positions(n).into_iter().map(|p| p as Label).collect();
    let actual: BTreeSet<Label> = ps.pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
    if expected != actual {
        let missing: Vec<_> = expected.difference(&actual).collect();
        let extra: Vec<_> = actual.difference(&expected).collect();
        return Err(Error::PositionSetMismatch {
            kind: kind.to_string(),
            order: n,
            detail: format!("missing {missing:?}, unexpected {extra:?}"),
        });
    }

    let mut slots = vec![Slot::Hook; kind.length(n)];
    for &(a, b) in ps.pairs() {
        slots[a as usize - 1] = Slot::Value(b - a);
        slots[b as usize - 1] = Slot::Value(b - a);
    }
    Ok(SequenceForm::new(kind, slots))
}

/// Reads each value's two positions as a pair, sorted by value. Distances
/// are not checked.
pub fn sequence_to_pairs(s: &SequenceForm) -> Result<PairSystem> {
    let pairs = s
        .occurrences()
        .into_iter()
        .map(|(value, pos)| match pos.as_slice() {
            &[i, j] => Ok((i as Label, j as Label)),
            _ => Err(Error::MultiplicityError {
                value,
                count: pos.len(),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    PairSystem::new(pairs)
}

/// Parses a sequence. Tokens are whitespace separated; `*` and `0` are both
/// read as the hook. A single token of several characters is read in the
/// compact form where every character is one slot (`48574365387*6`), which
/// only works when all values are single digits.
pub fn parse_sequence(text: &str, kind: SequenceKind) -> Result<SequenceForm> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let slots = match tokens.as_slice() {
        [] => return Err(Error::ParseError("empty sequence".into())),
        [compact] if compact.chars().count() > 1 => compact
            .chars()
            .map(|c| match c {
                '*' | '0' => Ok(Slot::Hook),
                '1'..='9' => Ok(Slot::Value(Label::from(c as u8 - b'0'))),
                _ => Err(Error::ParseError(format!(
                    "unexpected character {c:?} in {compact:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?,
        _ => tokens.iter().map(|t| parse_slot(t)).collect::<Result<Vec<_>>>()?,
    };
    Ok(SequenceForm::new(kind, slots))
}

fn parse_slot(token: &str) -> Result<Slot> {
    if token == "*" {
        return Ok(Slot::Hook);
    }
    match token.parse::<Label>() {
        Ok(0) => Ok(Slot::Hook),
        Ok(v) if v > 0 => Ok(Slot::Value(v)),
        _ => Err(Error::ParseError(format!("bad sequence token {token:?}"))),
    }
}

/// Canonical space-separated rendering with `*` for the hook.
pub fn format_sequence(s: &SequenceForm) -> String {
    s.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str, kind: SequenceKind) -> SequenceForm {
        parse_sequence(text, kind).unwrap()
    }

    #[test]
    fn label_sets() {
        assert_eq!(target_label_set(2).unwrap(), vec![1, 3]);
        assert_eq!(target_label_set(3).unwrap(), vec![1, 2, 4]);
        let twelve = target_label_set(12).unwrap();
        assert_eq!(twelve, (1..=11).chain([13]).collect::<Vec<_>>());
        assert_eq!(target_label_set(1), Err(Error::DegenerateOrder(1)));
        assert_eq!(target_label_set(0), Err(Error::DegenerateOrder(0)));
    }

    #[test]
    fn edge_targets() {
        let t = |k, d, q| edge_target_set(&TargetParams::new(k, d, q).unwrap());
        assert_eq!(t(2, 1, 6), vec![2, 3, 4, 5, 6, 7]);
        assert_eq!(t(1, 1, 1), vec![1]);
        assert_eq!(t(3, 2, 4), vec![3, 5, 7, 9]);
        assert!(t(3, 2, 0).is_empty());
        assert!(TargetParams::new(0, 1, 3).is_err());
        assert!(TargetParams::new(1, 0, 3).is_err());
    }

    #[test]
    fn progression_membership() {
        let t = TargetParams::new(3, 2, 4).unwrap();
        assert_eq!(t.index_of(3), Some(0));
        assert_eq!(t.index_of(9), Some(3));
        assert_eq!(t.index_of(11), None);
        assert_eq!(t.index_of(4), None);
        assert_eq!(t.index_of(1), None);
    }

    #[test]
    fn induced_labels() {
        let ps = PairSystem::new([(1, 3), (2, 5)]).unwrap();
        let (g, f) = ps.to_labeling();
        assert_eq!(induced_edge_labels(&g, &f).unwrap(), vec![2, 3]);

        let (g, f) = PairSystem::new([(1, 3)]).unwrap().to_labeling();
        assert_eq!(induced_edge_labels(&g, &f).unwrap(), vec![2]);

        let p3 = Graph::path(3);
        let f = VertexLabeling::new(vec![1, 2, 4]);
        assert_eq!(induced_edge_labels(&p3, &f).unwrap(), vec![1, 2]);

        let short = VertexLabeling::new(vec![1, 2]);
        assert_eq!(
            induced_edge_labels(&p3, &short),
            Err(Error::ShapeMismatch {
                labels: 2,
                vertices: 3
            })
        );
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(0, []).is_err());
        let g = Graph::new(4, [(1, 2)]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 1));
    }

    #[test]
    fn edge_list_format() {
        let g = Graph::parse_edge_list("# path\np 3\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(Graph::parse_edge_list("1 2\n").is_err());
        assert!(Graph::parse_edge_list("p 3\n1\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn pairs_normalize_and_reject_reuse() {
        let ps = PairSystem::new([(13, 11), (1, 8)]).unwrap();
        assert_eq!(ps.pairs(), &[(11, 13), (1, 8)]);
        assert!(PairSystem::new([(1, 3), (3, 5)]).is_err());
        assert!(PairSystem::new([(0, 3)]).is_err());
        assert!(PairSystem::new([(2, 2)]).is_err());
        assert!(PairSystem::new(Vec::new()).is_err());
    }

    #[test]
    fn pairs_text_and_json() {
        let ps = PairSystem::parse_text("1-3 2-5").unwrap();
        assert_eq!(ps.to_string(), "1-3 2-5");
        assert!(PairSystem::parse_text("1-3 2").is_err());

        let rec = ps.to_record(2, 1);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(json, r#"{"n":2,"k":2,"d":1,"pairs":[[1,3],[2,5]]}"#);
        let back: PairRecord = serde_json::from_str(r#"{"pairs":[[1,3],[2,5]],"d":1,"k":2,"n":2}"#).unwrap();
        assert_eq!(back.to_pairs().unwrap(), ps);

        let bad = PairRecord { n: 3, ..rec };
        assert!(bad.to_pairs().is_err());
    }

    #[test]
    fn pairs_to_sequence_examples() {
        let ps = PairSystem::new([(1, 5), (2, 10), (3, 8), (4, 11), (6, 9), (7, 13)]).unwrap();
        let s = pairs_to_sequence(&ps, SequenceKind::Hooked { d: 3 }).unwrap();
        assert_eq!(s.to_string(), "4 8 5 7 4 3 6 5 3 8 7 * 6");

        let ps = PairSystem::new([(1, 2), (3, 5)]).unwrap();
        let s = pairs_to_sequence(&ps, SequenceKind::HookedSkolem).unwrap();
        assert_eq!(s, seq("1 1 2 0 2", SequenceKind::HookedSkolem));

        let ps = PairSystem::new([(1, 2)]).unwrap();
        let s = pairs_to_sequence(&ps, SequenceKind::Skolem).unwrap();
        assert_eq!(s.to_string(), "1 1");
    }

    #[test]
    fn pairs_to_sequence_rejects_wrong_positions() {
        let ps = PairSystem::new([(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            pairs_to_sequence(&ps, SequenceKind::HookedSkolem),
            Err(Error::PositionSetMismatch { .. })
        ));
        let ps = PairSystem::new([(1, 2), (3, 5)]).unwrap();
        assert!(pairs_to_sequence(&ps, SequenceKind::Skolem).is_err());
    }

    #[test]
    fn sequence_to_pairs_examples() {
        let ps = sequence_to_pairs(&seq("1 1 2 0 2", SequenceKind::HookedSkolem)).unwrap();
        assert_eq!(ps.pairs(), &[(1, 2), (3, 5)]);

        let ps = sequence_to_pairs(&seq("4 8 5 7 4 3 6 5 3 8 7 * 6", SequenceKind::Hooked { d: 3 })).unwrap();
        assert_eq!(ps.pairs(), &[(6, 9), (1, 5), (3, 8), (7, 13), (4, 11), (2, 10)]);

        let ps = sequence_to_pairs(&seq("1 2 1 2", SequenceKind::Skolem)).unwrap();
        assert_eq!(ps.pairs(), &[(1, 3), (2, 4)]);

        assert_eq!(
            sequence_to_pairs(&seq("1 1 1 2 2", SequenceKind::Skolem)),
            Err(Error::MultiplicityError { value: 1, count: 3 })
        );
    }

    #[test]
    fn parse_compact_and_tokens() {
        let kind = SequenceKind::Hooked { d: 3 };
        let s = seq("48574365387*6", kind);
        assert_eq!(s.len(), 13);
        assert_eq!(s.hook_positions(), vec![12]);
        assert_eq!(s, seq("4 8 5 7 4 3 6 5 3 8 7 * 6", kind));

        let s = seq("64758463573*8", kind);
        assert_eq!(s.len(), 13);
        assert_eq!(s.hook_positions(), vec![12]);

        let s = seq("1 1 2 0 2", SequenceKind::HookedSkolem);
        assert_eq!(s.len(), 5);
        assert_eq!(s.hook_positions(), vec![4]);
        assert_eq!(format_sequence(&s), "1 1 2 * 2");

        let s = seq("10 3 12", kind);
        assert_eq!(s.slots(), &[Slot::Value(10), Slot::Value(3), Slot::Value(12)]);

        assert!(parse_sequence("", kind).is_err());
        assert!(parse_sequence("1 x 2", kind).is_err());
        assert!(parse_sequence("1 -2", kind).is_err());
        assert!(parse_sequence("12a", kind).is_err());
    }
}
