//! Transitive subgroups of SL(n,q).
//!
//! Exhaustive mode indexes all of SL(n,q), collects every subgroup generated
//! by a pair of cyclic subgroups (the first taken up to conjugacy), keeps the
//! transitive ones and merges SL-conjugates via a canonical form: the least
//! conjugate as a bitset over the element index. Randomized mode closes
//! seeded random pairs and merges by fingerprint only.

use std::collections::{BTreeMap, HashMap, HashSet};

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{closure, fingerprint, GroupFingerprint, GroupSet, MatGF, GL};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassifyMode {
    /// Exhaustive when `|SL(n,q)|` is within the enumeration cap, else
    /// randomized.
    Auto,
    Exhaustive,
    Randomized,
}

#[derive(Clone, Debug)]
pub struct TransitiveClass {
    pub fingerprint: GroupFingerprint,
    pub generators: Vec<MatGF>,
    pub group: GroupSet,
    /// Number of SL-conjugates (exhaustive mode only).
    pub conjugates: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub q: u64,
    pub n: usize,
    pub exhaustive: bool,
    /// `"SL-conjugacy"` or `"fingerprint"`.
    pub up_to: &'static str,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    /// Sorted by order, then fingerprint.
    pub classes: Vec<TransitiveClass>,
    sl: Vec<MatGF>,
}

impl Classification {
    pub fn orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.fingerprint.order).collect()
    }

    /// Whether some SL-conjugate of class `small` is a normal subgroup of
    /// the representative of class `big` (exhaustive mode only).
    pub fn has_normal_conjugate(&self, small: usize, big: usize) -> Result<bool> {
        if !self.exhaustive {
            return Err(Error::InvalidArgument("conjugacy data needs exhaustive mode".into()));
        }
        let gl = &self.classes[big].group.gl;
        let (s, b) = (&self.classes[small].group, &self.classes[big].group);
        for g in &self.sl {
            let gi = gl.inv(g)?;
            let conj: Vec<MatGF> = s.elements.iter().map(|h| gl.mul(&gl.mul(g, h), &gi)).collect();
            if conj.iter().all(|h| b.contains(h)) {
                let c = GroupSet::from_elements(gl, conj)?;
                if c.is_normal_in(b)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// SL(n,q) with an element index and (when small enough) a product table.
struct Indexed {
    gl: GL,
    elems: Vec<MatGF>,
    index: HashMap<MatGF, u32>,
    table: Vec<u32>,
    inv: Vec<u32>,
    /// Vector code of the image of the first basis vector.
    e1: Vec<u64>,
    id: u32,
}

const TABLE_LIMIT: usize = 4096;

impl Indexed {
    fn new(gl: &GL, cap: u64) -> Result<Self> {
        let elems = gl.sl_elements(cap)?;
        let index: HashMap<MatGF, u32> = elems.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let nn = elems.len();
        let table = if nn <= TABLE_LIMIT {
            elems
                .par_iter()
                .flat_map_iter(|a| elems.iter().map(|b| index[&gl.mul(a, b)]).collect::<Vec<_>>())
                .collect()
        } else {
            Vec::new()
        };
        let inv = elems.iter().map(|a| Ok(index[&gl.inv(a)?])).collect::<Result<Vec<_>>>()?;
        let e1 = elems
            .iter()
            .map(|a| gl.vector_code(&(0..gl.n()).map(|i| a.entry(i, 0)).collect::<Vec<_>>()))
            .collect();
        let id = index[&gl.identity()];
        Ok(Indexed {
            gl: gl.clone(),
            elems,
            index,
            table,
            inv,
            e1,
            id,
        })
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, i: u32, j: u32) -> u32 {
        if self.table.is_empty() {
            self.index[&self.gl.mul(&self.elems[i as usize], &self.elems[j as usize])]
        } else {
            self.table[i as usize * self.len() + j as usize]
        }
    }

    fn closure(&self, gens: &[u32]) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert(self.id as usize);
        let mut stack = vec![self.id];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !bits.put(b as usize) {
                    stack.push(b);
                }
            }
        }
        bits
    }

    fn transitive(&self, bits: &FixedBitSet) -> bool {
        let images: HashSet<u64> = bits.ones().map(|i| self.e1[i]).collect();
        images.len() as u64 == self.gl.nonzero_vectors()
    }

    /// Least conjugate (by block order) and the number of distinct conjugates.
    fn canonical(&self, bits: &FixedBitSet) -> (FixedBitSet, u64) {
        let members: Vec<u32> = bits.ones().map(|i| i as u32).collect();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut best: Option<FixedBitSet> = None;
        for g in 0..self.len() as u32 {
            let gi = self.inv[g as usize];
            let mut c = FixedBitSet::with_capacity(self.len());
            for &h in &members {
                c.insert(self.mul(self.mul(g, h), gi) as usize);
            }
            if best.as_ref().map_or(true, |b| c.as_slice() < b.as_slice()) {
                best = Some(c.clone());
            }
            seen.insert(c);
        }
        (best.unwrap(), seen.len() as u64)
    }

    /// Distinct cyclic subgroups with a generator each, in element order.
    fn cyclic_subgroups(&self) -> Vec<(FixedBitSet, u32)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..self.len() as u32 {
            let c = self.closure(&[i]);
            if seen.insert(c.clone()) {
                out.push((c, i));
            }
        }
        out
    }

    fn group_set(&self, bits: &FixedBitSet, gens: &[u32]) -> GroupSet {
        GroupSet {
            gl: self.gl.clone(),
            gens: gens.iter().map(|&g| self.elems[g as usize].clone()).collect(),
            elements: bits.ones().map(|i| self.elems[i].clone()).collect(),
        }
    }
}

fn sort_classes(classes: &mut [TransitiveClass]) {
    classes.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint).then_with(|| a.generators.cmp(&b.generators)));
}

/// Transitive subgroups of SL(n,q) up to SL-conjugacy (exhaustive) or up to
/// fingerprint (randomized, `samples` seeded generator pairs, each closure
/// capped at `closure_cap`).
pub fn classify_transitive_subgroups(q: u64, n: usize, mode: ClassifyMode, enum_cap: u64, closure_cap: u64, seed: u64, samples: u64) -> Result<Classification> {
    let gl = GL::new(q, n)?;
    let fits = gl.sl_order() <= enum_cap as u128;
    let exhaustive = match mode {
        ClassifyMode::Exhaustive if !fits => {
            return Err(Error::CapExceeded {
                what: format!("|SL({n}, {q})| = {}", gl.sl_order()),
                cap: enum_cap,
            })
        }
        ClassifyMode::Exhaustive => true,
        ClassifyMode::Auto => fits,
        ClassifyMode::Randomized => false,
    };
    if exhaustive {
        exhaustive_classes(&gl, enum_cap)
    } else {
        randomized_classes(&gl, closure_cap, seed, samples)
    }
}

fn exhaustive_classes(gl: &GL, cap: u64) -> Result<Classification> {
    let ix = Indexed::new(gl, cap)?;
    let cyclic = ix.cyclic_subgroups();
    let mut rep_of: HashMap<FixedBitSet, u32> = HashMap::new();
    for (c, g) in &cyclic {
        rep_of.entry(ix.canonical(c).0).or_insert(*g);
    }
    let mut reps: Vec<u32> = rep_of.into_values().collect();
    reps.sort();
    let pairs: Vec<(u32, u32)> = reps.iter().flat_map(|&a| cyclic.iter().map(move |(_, b)| (a, *b))).collect();
    let generated: Vec<(FixedBitSet, Vec<u32>)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let gens = if a == b { vec![a] } else { vec![a, b] };
            (ix.closure(&gens), gens)
        })
        .collect();
    let mut subgroups: HashMap<FixedBitSet, Vec<u32>> = HashMap::new();
    for (bits, gens) in generated {
        subgroups.entry(bits).or_insert(gens);
    }
    let mut transitive: Vec<(FixedBitSet, Vec<u32>)> = subgroups.into_iter().filter(|(b, _)| ix.transitive(b)).collect();
    transitive.sort_by(|a, b| a.1.cmp(&b.1));
    let canon: Vec<(FixedBitSet, u64)> = transitive.par_iter().map(|(b, _)| ix.canonical(b)).collect();
    let mut classes_by_canon: HashMap<FixedBitSet, TransitiveClass> = HashMap::new();
    for ((bits, gens), (c, count)) in transitive.iter().zip(canon) {
        classes_by_canon.entry(c).or_insert_with(|| {
            let group = ix.group_set(bits, gens);
            TransitiveClass {
                fingerprint: fingerprint(&group),
                generators: group.gens.clone(),
                group,
                conjugates: Some(count),
            }
        });
    }
    let mut classes: Vec<TransitiveClass> = classes_by_canon.into_values().collect();
    sort_classes(&mut classes);
    Ok(Classification {
        q: gl.q(),
        n: gl.n(),
        exhaustive: true,
        up_to: "SL-conjugacy",
        seed: None,
        samples: None,
        classes,
        sl: ix.elems,
    })
}

fn randomized_classes(gl: &GL, closure_cap: u64, seed: u64, samples: u64) -> Result<Classification> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<[MatGF; 2]> = (0..samples).map(|_| [gl.random_sl(&mut rng), gl.random_sl(&mut rng)]).collect();
    let results: Vec<Option<TransitiveClass>> = pairs
        .par_iter()
        .map(|gens| match closure(gl, gens, closure_cap) {
            Ok(group) => {
                let fp = fingerprint(&group);
                Ok(fp.transitive.then(|| TransitiveClass {
                    fingerprint: fp,
                    generators: gens.to_vec(),
                    group,
                    conjugates: None,
                }))
            }
            Err(Error::CapExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    // first sample (in seeded order) wins for each fingerprint
    let mut by_fp: BTreeMap<GroupFingerprint, TransitiveClass> = BTreeMap::new();
    for c in results.into_iter().flatten() {
        by_fp.entry(c.fingerprint.clone()).or_insert(c);
    }
    let mut classes: Vec<TransitiveClass> = by_fp.into_values().collect();
    sort_classes(&mut classes);
    Ok(Classification {
        q: gl.q(),
        n: gl.n(),
        exhaustive: false,
        up_to: "fingerprint",
        seed: Some(seed),
        samples: Some(samples),
        classes,
        sl: Vec::new(),
    })
}

/// Independent count of transitive conjugacy classes from the full subgroup
/// lattice: every subgroup is reached by repeatedly joining cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCheck {
    pub subgroups: usize,
    pub transitive_classes: usize,
    /// Whether the transitive classes coincide with the pair-generated ones.
    pub agrees: bool,
}

pub fn subgroup_lattice_transitive(q: u64, n: usize, cap: u64) -> Result<LatticeCheck> {
    let gl = GL::new(q, n)?;
    let ix = Indexed::new(&gl, cap)?;
    let cyclic = ix.cyclic_subgroups();
    let mut all: HashMap<FixedBitSet, Vec<u32>> = cyclic.iter().map(|(b, g)| (b.clone(), vec![*g])).collect();
    let mut frontier: Vec<FixedBitSet> = all.keys().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            let gens = all[h].clone();
            for (c, g) in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let mut gs = gens.clone();
                gs.push(*g);
                let j = ix.closure(&gs);
                if !all.contains_key(&j) {
                    all.insert(j.clone(), gs);
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let lattice: HashSet<FixedBitSet> = all.keys().filter(|b| ix.transitive(b)).map(|b| ix.canonical(b).0).collect();
    // the pair-generated classes, recomputed on the same index
    let mut pair: HashSet<FixedBitSet> = HashSet::new();
    for (_, ga) in &cyclic {
        for (_, gb) in &cyclic {
            let bits = ix.closure(&[*ga, *gb]);
            if ix.transitive(&bits) {
                pair.insert(bits);
            }
        }
    }
    let pair: HashSet<FixedBitSet> = pair.iter().map(|b| ix.canonical(b).0).collect();
    Ok(LatticeCheck {
        subgroups: all.len(),
        transitive_classes: lattice.len(),
        agrees: lattice == pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{DEFAULT_CLOSURE_CAP, DEFAULT_ENUM_CAP};

    fn classify(q: u64, n: usize) -> Classification {
        classify_transitive_subgroups(q, n, ClassifyMode::Exhaustive, DEFAULT_ENUM_CAP, DEFAULT_CLOSURE_CAP, 0, 0).unwrap()
    }

    #[test]
    fn small_classifications() {
        assert_eq!(classify(2, 2).orders(), vec![3, 6]);
        let c = classify(2, 3);
        assert_eq!(c.orders(), vec![7, 21, 168]);
        assert!(c.has_normal_conjugate(0, 1).unwrap());
        assert!(!c.has_normal_conjugate(1, 2).unwrap());
        let c = classify(3, 2);
        assert_eq!(c.orders(), vec![8, 24]);
        assert_eq!(c.classes[0].fingerprint.involutions, 1);
        assert_eq!(c.classes[0].fingerprint.histogram.get(&4), Some(&6));
    }

    #[test]
    fn lattice_agrees_on_small_cases() {
        for (q, n) in [(2u64, 2usize), (3, 2), (2, 3)] {
            let l = subgroup_lattice_transitive(q, n, DEFAULT_ENUM_CAP).unwrap();
            assert!(l.agrees, "({q},{n}) {l:?}");
            assert_eq!(l.transitive_classes, classify(q, n).classes.len());
        }
        // SL(2,3) has 15 subgroups
        assert_eq!(subgroup_lattice_transitive(3, 2, DEFAULT_ENUM_CAP).unwrap().subgroups, 15);
    }

    #[test]
    fn randomized_is_reproducible() {
        let a = classify_transitive_subgroups(3, 2, ClassifyMode::Randomized, DEFAULT_ENUM_CAP, DEFAULT_CLOSURE_CAP, 7, 200).unwrap();
        let b = classify_transitive_subgroups(3, 2, ClassifyMode::Randomized, DEFAULT_ENUM_CAP, DEFAULT_CLOSURE_CAP, 7, 200).unwrap();
        assert_eq!(a.orders(), b.orders());
        assert_eq!(a.classes.iter().map(|c| &c.generators).collect::<Vec<_>>(), b.classes.iter().map(|c| &c.generators).collect::<Vec<_>>());
        assert_eq!(a.up_to, "fingerprint");
        assert!(a.has_normal_conjugate(0, 0).is_err());
    }
}
