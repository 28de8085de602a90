//! Maps from a finite ground set into the chain {1,…,n}.
//!
//! The same type serves as an order preserving map of a poset and as a graph
//! coloring; only the constraints imposed by the enumerators differ.

/// A function from `{0,…,m-1}` into labels `{1,…,n}`, stored by value list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelMap {
    values: Vec<u32>,
}

impl LabelMap {
    pub fn new(values: Vec<u32>) -> Self {
        LabelMap { values }
    }

    pub fn constant(size: usize, label: u32) -> Self {
        LabelMap {
            values: vec![label; size],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.values[i]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// All maps from a `size`-element set into `{1,…,n}`, in lexicographic
    /// order. `n = 0` yields no maps unless the ground set is empty.
    pub fn enumerate_all(size: usize, n: u32) -> Vec<LabelMap> {
        if size == 0 {
            return vec![LabelMap::new(Vec::new())];
        }
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = vec![1u32; size];
        loop {
            out.push(LabelMap::new(current.clone()));
            // odometer increment, most significant digit first
            let mut i = size;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current[i] < n {
                    current[i] += 1;
                    for v in &mut current[i + 1..] {
                        *v = 1;
                    }
                    break;
                }
            }
        }
    }
}
