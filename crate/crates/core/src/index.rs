//! Subresultant index tuples, their orderings, and partition helpers.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Index tuple `delta = (delta_1, ..., delta_t)`, `t >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DeltaIndex(Vec<usize>);

impl DeltaIndex {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty(), "an index tuple needs at least one entry");
        DeltaIndex(parts)
    }

    pub fn zeros(t: usize) -> Self {
        DeltaIndex::new(vec![0; t])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|delta|`
    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }
}

impl fmt::Display for DeltaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DeltaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for DeltaIndex {
    type Err = Error;

    /// Parses `2,1` or `(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad index entry `{}` in `{s}`", p.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DeltaIndex::new(parts))
    }
}

/// Weakly decreasing list of positive parts (multiplicity structures and
/// conjugates).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts decreasingly and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(&self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Graded lexicographic comparison: larger sum wins, ties broken by the
/// first differing coordinate.
pub fn glex_cmp(a: &DeltaIndex, b: &DeltaIndex) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.sum().cmp(&b.sum()).then_with(|| a.0.cmp(&b.0)))
}

/// Plain lexicographic comparison.
pub fn lex_cmp(a: &DeltaIndex, b: &DeltaIndex) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.0.cmp(&b.0))
}

/// Every `delta` in `N^t` with `|delta| <= d0`, strictly decreasing in glex.
pub fn enumerate_deltas(t: usize, d0: usize) -> Vec<DeltaIndex> {
    assert!(t >= 1);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(t);
    for s in (0..=d0).rev() {
        compositions_desc(s, t, &mut buf, &mut |parts| {
            out.push(DeltaIndex::new(parts.to_vec()))
        });
    }
    out
}

/// Weak compositions of `total` into `parts` pieces, decreasing lex.
fn compositions_desc(
    total: usize,
    parts: usize,
    buf: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if parts == 1 {
        buf.push(total);
        emit(buf);
        buf.pop();
        return;
    }
    for first in (0..=total).rev() {
        buf.push(first);
        compositions_desc(total - first, parts - 1, buf, emit);
        buf.pop();
    }
}

/// Weakly decreasing `lambda` of length `t` with `|lambda| = t`, strictly
/// decreasing in lex order.
pub fn enumerate_partition_indices(t: usize) -> Vec<DeltaIndex> {
    assert!(t >= 1);
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(t);
    partitions_desc(t, t, &mut buf, &mut |parts| {
        let mut v = parts.to_vec();
        v.resize(t, 0);
        out.push(DeltaIndex::new(v));
    });
    out
}

fn partitions_desc(
    rest: usize,
    max_part: usize,
    buf: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if rest == 0 {
        emit(buf);
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        buf.push(part);
        partitions_desc(rest - part, part, buf, emit);
        buf.pop();
    }
}

/// Conjugate: entry `i` counts the parts that are `>= i`. The all-zero tuple
/// maps to the empty partition.
pub fn conjugate(parts: &[usize]) -> Partition {
    let max = parts.iter().copied().max().unwrap_or(0);
    Partition(
        (1..=max)
            .map(|i| parts.iter().filter(|&&d| d >= i).count())
            .collect(),
    )
}

/// `e_j(values)`, with `e_0 = 1`.
pub fn elem_sym<R: Ring>(values: &[R], j: usize) -> Result<R> {
    if j > values.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            limit: values.len(),
        });
    }
    // e[k] after processing a prefix, updated from the top down
    let mut e = vec![R::zero(); j + 1];
    e[0] = R::one();
    for v in values {
        for k in (1..=j).rev() {
            e[k] = e[k].add(&e[k - 1].mul(v));
        }
    }
    Ok(e[j].clone())
}

/// `e_j` of `values` with entry `skip` removed.
pub fn elem_sym_excluding<R: Ring>(values: &[R], skip: usize, j: usize) -> Result<R> {
    if skip >= values.len() {
        return Err(Error::IndexOutOfRange {
            index: skip,
            limit: values.len(),
        });
    }
    let rest: Vec<R> = values
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != skip)
        .map(|(_, v)| v.clone())
        .collect();
    elem_sym(&rest, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    fn d(v: &[usize]) -> DeltaIndex {
        DeltaIndex::new(v.to_vec())
    }

    #[test]
    fn glex_examples() {
        assert_eq!(
            glex_cmp(&d(&[2, 0]), &d(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            glex_cmp(&d(&[0, 2]), &d(&[1, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(glex_cmp(&d(&[1, 1]), &d(&[1, 1])).unwrap(), Ordering::Equal);
        assert_eq!(
            glex_cmp(&d(&[1]), &d(&[1, 0])),
            Err(Error::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn delta_enumeration() {
        let list = |t, d0| {
            enumerate_deltas(t, d0)
                .iter()
                .map(|x| x.parts().to_vec())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            list(2, 2),
            vec![
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
                vec![1, 0],
                vec![0, 1],
                vec![0, 0]
            ]
        );
        assert_eq!(list(1, 3), vec![vec![3], vec![2], vec![1], vec![0]]);
        assert_eq!(
            list(3, 1),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]
        );
        assert_eq!(list(3, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn partition_enumeration() {
        let five: Vec<Vec<usize>> = enumerate_partition_indices(5)
            .iter()
            .map(|x| x.parts().to_vec())
            .collect();
        assert_eq!(
            five,
            vec![
                vec![5, 0, 0, 0, 0],
                vec![4, 1, 0, 0, 0],
                vec![3, 2, 0, 0, 0],
                vec![3, 1, 1, 0, 0],
                vec![2, 2, 1, 0, 0],
                vec![2, 1, 1, 1, 0],
                vec![1, 1, 1, 1, 1],
            ]
        );
        assert_eq!(enumerate_partition_indices(1), vec![d(&[1])]);
        assert_eq!(
            enumerate_partition_indices(3),
            vec![d(&[3, 0, 0]), d(&[2, 1, 0]), d(&[1, 1, 1])]
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&[3, 2, 0, 0, 0]).parts(), &[2, 2, 1]);
        assert_eq!(conjugate(&[5, 0, 0, 0, 0]).parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(conjugate(&[1, 1, 1, 1, 1]).parts(), &[5]);
        assert_eq!(conjugate(&[4]).parts(), &[1, 1, 1, 1]);
        assert!(conjugate(&[0, 0]).parts().is_empty());
    }

    #[test]
    fn elementary_symmetric() {
        let v: Vec<Rational> = [1, 2, 3].iter().map(|&x| Rational::from(x)).collect();
        assert_eq!(elem_sym(&v, 0).unwrap(), Rational::from(1));
        assert_eq!(elem_sym(&v, 1).unwrap(), Rational::from(6));
        assert_eq!(elem_sym(&v, 2).unwrap(), Rational::from(11));
        assert_eq!(elem_sym(&v, 3).unwrap(), Rational::from(6));
        assert!(elem_sym(&v, 4).is_err());
        // excluding the first value: e_2(2,3) = 6 = e_2 - e_1*1 + e_0*1
        assert_eq!(elem_sym_excluding(&v, 0, 2).unwrap(), Rational::from(6));
        assert_eq!(Rational::from(11 - 6 + 1), Rational::from(6));
    }

    #[test]
    fn parse_delta() {
        assert_eq!("2,1".parse::<DeltaIndex>().unwrap(), d(&[2, 1]));
        assert_eq!("(0, 3)".parse::<DeltaIndex>().unwrap(), d(&[0, 3]));
        assert!("2,x".parse::<DeltaIndex>().is_err());
    }
}
