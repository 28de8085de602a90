//! Permutations of a finite indexed ground set and finite permutation groups
//! stored as explicit element lists: generation by closure, cycle structure,
//! sign, orbits, induced actions on label maps, and Burnside averaging.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::label::LabelMap;

/// A bijection of `{0,…,m-1}`, stored by its image list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on `{0,…,m-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &img in &images {
            if img >= m || seen[img] {
                return Err(Error::NotABijection { degree: m, images });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{0,…,degree-1}` from disjoint cycles; indices
    /// not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::NotABijection {
                        degree,
                        images: cycle.clone(),
                    });
                }
                if touched[x] {
                    return Err(Error::RepeatedElement {
                        name: x.to_string(),
                    });
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = (0..self.degree())
            .map(|x| self.apply(other.apply(x)))
            .collect();
        Ok(Permutation { images })
    }

    /// Cycle decomposition as a partition of the ground set: the orbits of
    /// the cyclic group generated by this permutation.
    pub fn cycles(&self) -> OrbitPartition {
        let m = self.degree();
        let mut visited = vec![false; m];
        let mut blocks = Vec::new();
        for start in 0..m {
            if visited[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                block.push(x);
                x = self.apply(x);
            }
            block.sort_unstable();
            blocks.push(block);
        }
        OrbitPartition::from_sorted_blocks(m, blocks)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().block_count()
    }

    /// Sign as a permutation of the ground set: `(-1)^(m + c)` where `c` is
    /// the number of cycles.
    pub fn sign(&self) -> i64 {
        if (self.degree() + self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for block in self.cycles().blocks() {
            if block.len() < 2 {
                continue;
            }
            write!(f, "(")?;
            // walk the cycle in application order starting from its minimum
            let mut x = block[0];
            loop {
                write!(f, "{}", x)?;
                x = self.apply(x);
                if x == block[0] {
                    break;
                }
                write!(f, " ")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A partition of `{0,…,m-1}` into disjoint blocks, each sorted ascending and
/// listed in order of their minimum (= representative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    size: usize,
    blocks: Vec<Vec<usize>>,
    block_index: Vec<usize>,
}

impl OrbitPartition {
    fn from_sorted_blocks(size: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.sort_by_key(|b| b[0]);
        let mut block_index = vec![usize::MAX; size];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                block_index[x] = b;
            }
        }
        OrbitPartition {
            size,
            blocks,
            block_index,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.block_index[x]
    }

    /// Minimum element of the block containing `x`.
    pub fn representative(&self, x: usize) -> usize {
        self.blocks[self.block_of(x)][0]
    }
}

/// A finite permutation group given by its full, closure-complete element
/// list, sorted lexicographically by image list (the identity comes first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// The smallest group containing the generators, computed by repeated
    /// multiplication until no new elements appear.
    pub fn closure(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::SizeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut elements: BTreeSet<Permutation> = BTreeSet::new();
        elements.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = generators.to_vec();
        while let Some(g) = frontier.pop() {
            if !elements.insert(g.clone()) {
                continue;
            }
            // products with every element so far, g itself included: an
            // element reachable only as g·g would otherwise be missed
            let mut new_items = vec![g.inverse()];
            for h in &elements {
                new_items.push(g.compose(h)?);
                new_items.push(h.compose(&g)?);
            }
            for item in new_items {
                if !elements.contains(&item) {
                    frontier.push(item);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: elements.into_iter().collect(),
        })
    }

    /// Builds a group from an explicit element list, verifying the group
    /// axioms (identity present, closed under composition).
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        for g in &set {
            if g.degree() != degree {
                return Err(Error::SizeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::InvalidAction {
                size: degree,
                detail: "element list does not contain the identity".into(),
            });
        }
        for g in &set {
            for h in &set {
                if !set.contains(&g.compose(h)?) {
                    return Err(Error::InvalidAction {
                        size: degree,
                        detail: format!("not closed under composition: {} * {}", g, h),
                    });
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: set.into_iter().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }
}

/// Orbits of a group acting on an abstract indexed set of `size` points via
/// `act(g, x)`. Representatives are the block minima. Identity and
/// partition-consistency violations surface as errors.
pub fn orbits<F>(group: &PermGroup, size: usize, act: F) -> Result<OrbitPartition>
where
    F: Fn(&Permutation, usize) -> usize,
{
    let e = group.identity();
    let mut visited = vec![false; size];
    let mut blocks = Vec::new();
    for start in 0..size {
        if visited[start] {
            continue;
        }
        if act(e, start) != start {
            return Err(Error::InvalidAction {
                size,
                detail: format!("identity moves point {}", start),
            });
        }
        let mut block = BTreeSet::new();
        for g in group.elements() {
            let y = act(g, start);
            if y >= size {
                return Err(Error::InvalidAction {
                    size,
                    detail: format!("image {} out of range", y),
                });
            }
            block.insert(y);
        }
        for &y in &block {
            if visited[y] {
                // an earlier orbit already claimed y, so orbits do not partition
                return Err(Error::InvalidAction {
                    size,
                    detail: format!("orbits overlap at point {}", y),
                });
            }
            visited[y] = true;
        }
        blocks.push(block.into_iter().collect());
    }
    Ok(OrbitPartition::from_sorted_blocks(size, blocks))
}

/// The induced left action on label maps: `(g·f)(x) = f(g⁻¹(x))`.
pub fn act_on_map(g: &Permutation, f: &LabelMap) -> LabelMap {
    debug_assert_eq!(g.degree(), f.len());
    let mut values = vec![0u32; f.len()];
    for x in 0..f.len() {
        values[g.apply(x)] = f.get(x);
    }
    LabelMap::new(values)
}

/// The subgroup of elements fixing `f` under the induced action.
pub fn stabilizer(group: &PermGroup, f: &LabelMap) -> PermGroup {
    let elements: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|g| act_on_map(g, f) == *f)
        .cloned()
        .collect();
    PermGroup::from_elements(group.degree(), elements)
        .expect("a stabilizer is always a subgroup")
}

/// Burnside's orbit count: the group average of fixpoint counts. The
/// division is checked exactly; a non-integral average means `fix_counter`
/// does not come from a group action.
pub fn burnside_count<F>(group: &PermGroup, fix_counter: F) -> Result<BigInt>
where
    F: Fn(&Permutation) -> BigInt,
{
    let mut sum = BigInt::from(0);
    for g in group.elements() {
        sum += fix_counter(g);
    }
    let order = BigInt::from(group.order());
    let (q, r) = sum.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::NonIntegralBurnside {
            sum: sum.to_string(),
            order: group.order(),
        });
    }
    Ok(q)
}
