//! Incremental Gaussian elimination over GF(2) with bitset rows.

#[derive(Clone, Debug)]
struct Row {
    bits: Vec<u64>,
    rhs: bool,
    pivot: usize,
    /// Indices of inserted equations whose sum is this row (sorted).
    combo: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Gf2System {
    vars: usize,
    words: usize,
    rows: Vec<Row>,
    inserted: usize,
}

/// A set of inserted equations whose left-hand sides cancel while the right-hand sides sum to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub equations: Vec<usize>,
}

fn sym_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn get(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn lowest(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl Gf2System {
    pub fn new(vars: usize) -> Self {
        Gf2System { vars, words: vars.div_ceil(64).max(1), rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Add the equation sum_{i in vars} x_i = rhs. Rows are kept fully reduced, so a new row is
    /// reduced against every pivot independently of order.
    pub fn insert(&mut self, vars: &[usize], rhs: bool) -> Result<(), Inconsistency> {
        let id = self.inserted;
        self.inserted += 1;
        let mut bits = vec![0u64; self.words];
        for &v in vars {
            assert!(v < self.vars, "variable out of range");
            bits[v / 64] ^= 1 << (v % 64);
        }
        let mut rhs = rhs;
        let mut combo = vec![id];
        for r in &self.rows {
            if get(&bits, r.pivot) {
                xor_into(&mut bits, &r.bits);
                rhs ^= r.rhs;
                combo = sym_diff(&combo, &r.combo);
            }
        }
        match lowest(&bits) {
            None if rhs => Err(Inconsistency { equations: combo }),
            None => Ok(()),
            Some(p) => {
                for r in self.rows.iter_mut() {
                    if get(&r.bits, p) {
                        xor_into(&mut r.bits, &bits);
                        r.rhs ^= rhs;
                        r.combo = sym_diff(&r.combo, &combo);
                    }
                }
                self.rows.push(Row { bits, rhs, pivot: p, combo });
                Ok(())
            }
        }
    }

    /// A solution with all free variables set to 0.
    pub fn solution(&self) -> Vec<bool> {
        let mut x = vec![false; self.vars];
        for r in &self.rows {
            x[r.pivot] = r.rhs;
        }
        x
    }
}
