//! Finite posets: construction by transitive closure, order preserving group
//! actions, quotient posets, and enumeration of (strictly) order preserving
//! maps into chains.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::label::LabelMap;
use crate::permgroup::{OrbitPartition, PermGroup, Permutation};
use crate::polynomial::Polynomial;
use crate::{Rational, RationalPolynomial};

/// A finite strict partial order on `{0,…,size-1}`, stored as the full
/// transitively closed relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    // less[p * size + q] iff p ≺ q
    less: Vec<bool>,
}

impl Poset {
    /// Transitive closure of the given strict relations. Fails when the
    /// closure would violate irreflexivity, i.e. the input has a cycle
    /// (antisymmetry violations are two-element cycles).
    pub fn from_relations(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut less = vec![false; size * size];
        for &(p, q) in relations {
            if p >= size || q >= size {
                return Err(Error::MalformedInput(format!(
                    "relation ({},{}) out of range for {} elements",
                    p, q, size
                )));
            }
            less[p * size + q] = true;
        }
        // Floyd–Warshall closure
        for k in 0..size {
            for p in 0..size {
                if less[p * size + k] {
                    for q in 0..size {
                        if less[k * size + q] {
                            less[p * size + q] = true;
                        }
                    }
                }
            }
        }
        for p in 0..size {
            if less[p * size + p] {
                return Err(Error::NotAPartialOrder { witness: p });
            }
        }
        Ok(Poset { size, less })
    }

    /// The total order `0 ≺ 1 ≺ … ≺ k-1`.
    pub fn chain(k: usize) -> Self {
        let mut less = vec![false; k * k];
        for p in 0..k {
            for q in p + 1..k {
                less[p * k + q] = true;
            }
        }
        Poset { size: k, less }
    }

    /// The empty relation on `k` elements.
    pub fn antichain(k: usize) -> Self {
        Poset {
            size: k,
            less: vec![false; k * k],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn less(&self, p: usize, q: usize) -> bool {
        self.less[p * self.size + q]
    }

    /// All related pairs `(p, q)` with `p ≺ q`, in lexicographic order.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for p in 0..self.size {
            for q in 0..self.size {
                if self.less(p, q) {
                    pairs.push((p, q));
                }
            }
        }
        pairs
    }

    pub fn is_antichain(&self) -> bool {
        self.less.iter().all(|&b| !b)
    }

    /// A linear extension (topological order, smallest index first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut remaining: Vec<usize> = (0..self.size).collect();
        let mut out = Vec::with_capacity(self.size);
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&p| remaining.iter().all(|&q| !self.less(q, p)))
                .expect("a validated poset always has a minimal element");
            out.push(remaining.remove(pos));
        }
        out
    }
}

/// Checks that `g` maps every related pair to a related pair.
pub fn is_automorphism(poset: &Poset, g: &Permutation) -> bool {
    order_violation(poset, g).is_none()
}

fn order_violation(poset: &Poset, g: &Permutation) -> Option<(usize, usize)> {
    for p in 0..poset.size() {
        for q in 0..poset.size() {
            if poset.less(p, q) && !poset.less(g.apply(p), g.apply(q)) {
                return Some((p, q));
            }
        }
    }
    None
}

/// Witness that `group` fails to act on `poset` by automorphisms: the first
/// group element, in element order, that maps a related pair to an unrelated
/// pair. `None` means the action is order preserving.
pub fn order_action_witness(
    poset: &Poset,
    group: &PermGroup,
) -> Option<(Permutation, usize, usize)> {
    for g in group.elements() {
        if let Some((p, q)) = order_violation(poset, g) {
            return Some((g.clone(), p, q));
        }
    }
    None
}

pub fn is_order_action(poset: &Poset, group: &PermGroup) -> bool {
    order_action_witness(poset, group).is_none()
}

pub(crate) fn require_order_action(poset: &Poset, group: &PermGroup) -> Result<()> {
    match order_action_witness(poset, group) {
        None => Ok(()),
        Some((g, p, q)) => Err(Error::InvalidOrderAction {
            g: g.to_string(),
            p,
            q,
        }),
    }
}

/// The quotient of a poset by an automorphism: elements are the cycles of
/// `g`, ordered by existence of related representatives.
#[derive(Debug, Clone)]
pub struct QuotientPoset {
    pub poset: Poset,
    pub cycles: OrbitPartition,
}

impl QuotientPoset {
    /// Block (= quotient element) containing ground element `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.cycles.block_of(x)
    }
}

/// Quotient of `poset` by the cyclic group generated by `g`. Requires `g` to
/// be an automorphism. Each cycle is verified to be an antichain, which the
/// automorphism precondition guarantees.
pub fn quotient_poset(poset: &Poset, g: &Permutation) -> Result<QuotientPoset> {
    if g.degree() != poset.size() {
        return Err(Error::SizeMismatch {
            left: poset.size(),
            right: g.degree(),
        });
    }
    if let Some((p, q)) = order_violation(poset, g) {
        return Err(Error::InvalidOrderAction {
            g: g.to_string(),
            p,
            q,
        });
    }
    let cycles = g.cycles();
    for block in cycles.blocks() {
        for &x in block {
            for &y in block {
                if poset.less(x, y) {
                    return Err(Error::CycleNotAntichain {
                        cycle: block.to_vec(),
                    });
                }
            }
        }
    }
    let mut relations = Vec::new();
    for (p, q) in poset.relation_pairs() {
        relations.push((cycles.block_of(p), cycles.block_of(q)));
    }
    let poset = Poset::from_relations(cycles.block_count(), &relations)?;
    Ok(QuotientPoset { poset, cycles })
}

fn walk_homs<F>(poset: &Poset, n: u32, strict: bool, visit: &mut F)
where
    F: FnMut(&[u32]),
{
    if poset.size() == 0 {
        visit(&[]);
        return;
    }
    let extension = poset.linear_extension();
    // lower covers in extension order: every p ≺ elem is assigned earlier
    let below: Vec<Vec<usize>> = extension
        .iter()
        .map(|&elem| (0..poset.size()).filter(|&p| poset.less(p, elem)).collect())
        .collect();
    let mut values = vec![0u32; poset.size()];

    fn recurse<F>(
        extension: &[usize],
        below: &[Vec<usize>],
        n: u32,
        strict: bool,
        pos: usize,
        values: &mut Vec<u32>,
        visit: &mut F,
    ) where
        F: FnMut(&[u32]),
    {
        if pos == extension.len() {
            visit(values);
            return;
        }
        let elem = extension[pos];
        let mut lb = 1u32;
        for &p in &below[pos] {
            let floor = if strict { values[p] + 1 } else { values[p] };
            lb = lb.max(floor);
        }
        for v in lb..=n {
            values[elem] = v;
            recurse(extension, below, n, strict, pos + 1, values, visit);
        }
        values[elem] = 0;
    }

    recurse(&extension, &below, n, strict, 0, &mut values, visit);
}

/// All (strictly) order preserving maps `poset → {1,…,n}`, sorted
/// lexicographically by value list.
pub fn enumerate_homs(poset: &Poset, n: u32, strict: bool) -> Vec<LabelMap> {
    let mut out = Vec::new();
    walk_homs(poset, n, strict, &mut |values| {
        out.push(LabelMap::new(values.to_vec()));
    });
    out.sort();
    out
}

/// Number of (strictly) order preserving maps `poset → {1,…,n}`.
pub fn count_homs(poset: &Poset, n: u32, strict: bool) -> u64 {
    let mut count = 0u64;
    walk_homs(poset, n, strict, &mut |_| count += 1);
    count
}

/// The (strict) order polynomial: the unique polynomial through the map
/// counts at `n = 1,…,|P|+1`. Its degree is asserted to be exactly `|P|`.
pub fn order_polynomial(poset: &Poset, strict: bool) -> Result<RationalPolynomial> {
    let size = poset.size();
    let points: Vec<(i64, Rational)> = (1..=size as i64 + 1)
        .map(|n| {
            let count = count_homs(poset, n as u32, strict);
            (n, Rational::from_integer(BigInt::from(count)))
        })
        .collect();
    let poly = Polynomial::interpolate(&points)?;
    if poly.degree() != Some(size) {
        return Err(Error::DegreeMismatch {
            expected: size,
            found: poly
                .degree()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "zero polynomial".into()),
        });
    }
    Ok(poly)
}
