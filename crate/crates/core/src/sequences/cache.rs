use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::bernoulli::extend_bernoulli;
use super::eulerian::{eulerian_row_mod, EulerianTable};
use super::harmonic::{harmonic_table, HarmonicTable};
use super::zigzag::ZigzagMod;
use crate::arith::{prime_power, ExactRat, Residue};

pub const ZIGZAG: &str = "zigzag";
pub const ZIGZAG_LONG: &str = "zigzag-long";
pub const HARMONIC: &str = "harmonic";
pub const EULERIAN_ROW: &str = "eulerian-row";

/// Persistent backing for modular tables. Purely an optimization: a miss
/// or a malformed entry falls back to recomputation.
pub trait TableStore: Send + Sync {
    fn load(&self, family: &str, p: u64, e: u32) -> Option<Vec<u64>>;
    fn save(&self, family: &str, p: u64, e: u32, modulus: u64, values: &[u64]);
}

type Slot<T> = Arc<OnceLock<Arc<T>>>;

struct Memo<K, T> {
    slots: Mutex<HashMap<K, Slot<T>>>,
}

impl<K: Eq + Hash + Clone, T> Default for Memo<K, T> {
    fn default() -> Self {
        Self {
            slots: Mutex::new(HashMap::new()),
        }
    }
}

impl<K: Eq + Hash + Clone, T> Memo<K, T> {
    /// The map lock is held only to fetch the slot; the build runs under the
    /// slot's `OnceLock`, so readers see either nothing or a finished table.
    fn get_or_build(&self, key: K, build: impl FnOnce() -> T) -> Arc<T> {
        let slot = {
            let mut slots = self.slots.lock().expect("memo lock");
            slots.entry(key).or_default().clone()
        };
        slot.get_or_init(|| Arc::new(build())).clone()
    }
}

/// Memoized exact sequences and per-`(p, e)` modular tables shared by the
/// check evaluators.
#[derive(Default)]
pub struct SequenceCache {
    store: Option<Box<dyn TableStore>>,
    bernoulli: Mutex<Vec<ExactRat>>,
    eulerian: Mutex<EulerianTable>,
    zigzag: Memo<(u64, u32), ZigzagMod>,
    zigzag_long: Memo<(u64, u32), ZigzagMod>,
    harmonic: Memo<(u64, u32), HarmonicTable>,
    eulerian_mod: Memo<(u64, u32), Vec<Residue>>,
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_store(store: Box<dyn TableStore>) -> Self {
        Self {
            store: Some(store),
            ..Self::default()
        }
    }

    fn load_checked(&self, family: &str, p: u64, e: u32, len: usize) -> Option<Vec<u64>> {
        let m = prime_power(p, e);
        let values = self.store.as_ref()?.load(family, p, e)?;
        (values.len() == len && values.iter().all(|&v| v < m)).then_some(values)
    }

    fn save(&self, family: &str, p: u64, e: u32, values: &[u64]) {
        if let Some(store) = &self.store {
            store.save(family, p, e, prime_power(p, e), values);
        }
    }

    pub fn bernoulli(&self, n: usize) -> ExactRat {
        let mut b = self.bernoulli.lock().expect("bernoulli lock");
        if b.is_empty() {
            b.push(ExactRat::from_integer(BigInt::from(1)));
        }
        extend_bernoulli(&mut b, n);
        b[n].clone()
    }

    pub fn eulerian_row(&self, n: usize) -> Vec<BigInt> {
        self.eulerian.lock().expect("eulerian lock").row(n).to_vec()
    }

    /// Length of the short zigzag table for `p`: covers every index up to
    /// `2p + 8` (enough for `E_{2p-2}` and the small Kummer shifts).
    pub fn zigzag_len(p: u64) -> usize {
        2 * p as usize + 8
    }

    /// Length of the long table: `2 p (p-1) + 8`, for shifts by `phi(p^2)`.
    pub fn zigzag_long_len(p: u64) -> usize {
        2 * (p * (p - 1)) as usize + 8
    }

    fn zigzag_family(&self, family: &'static str, p: u64, e: u32, len: usize) -> Arc<ZigzagMod> {
        let memo = if family == ZIGZAG { &self.zigzag } else { &self.zigzag_long };
        if e < 3 {
            let top = self.zigzag_family(family, p, 3, len);
            return memo.get_or_build((p, e), || top.reduce(prime_power(p, e)).expect("divisor"));
        }
        memo.get_or_build((p, e), || {
            let m = prime_power(p, e);
            if let Some(v) = self.load_checked(family, p, e, len) {
                return ZigzagMod::from_values(v, m);
            }
            let z = ZigzagMod::build(len - 1, m);
            self.save(family, p, e, z.values());
            z
        })
    }

    /// Zigzag numbers mod `p^e`, indices `0 ..= 2p + 7`.
    pub fn zigzag_mod(&self, p: u64, e: u32) -> Arc<ZigzagMod> {
        self.zigzag_family(ZIGZAG, p, e, Self::zigzag_len(p))
    }

    /// Zigzag numbers mod `p^e`, indices `0 ..= 2p(p-1) + 7`.
    pub fn zigzag_long_mod(&self, p: u64, e: u32) -> Arc<ZigzagMod> {
        self.zigzag_family(ZIGZAG_LONG, p, e, Self::zigzag_long_len(p))
    }

    pub fn harmonic(&self, p: u64, e: u32) -> Arc<HarmonicTable> {
        self.harmonic.get_or_build((p, e), || {
            if let Some(v) = self.load_checked(HARMONIC, p, e, p as usize) {
                if let Some(t) = HarmonicTable::from_values(p, e, &v) {
                    return t;
                }
            }
            let t = harmonic_table(p, e);
            let values: Vec<u64> = t.h.iter().map(|r| r.value()).collect();
            self.save(HARMONIC, p, e, &values);
            t
        })
    }

    /// Row `p - 2` of Euler's triangle mod `p^e`.
    pub fn eulerian_row_mod(&self, p: u64, e: u32) -> Arc<Vec<Residue>> {
        self.eulerian_mod.get_or_build((p, e), || {
            let m = prime_power(p, e);
            let n = p as usize - 2;
            if let Some(v) = self.load_checked(EULERIAN_ROW, p, e, n) {
                return v.into_iter().map(|x| Residue::new(x, m)).collect();
            }
            let row = eulerian_row_mod(n, m);
            let values: Vec<u64> = row.iter().map(|r| r.value()).collect();
            self.save(EULERIAN_ROW, p, e, &values);
            row
        })
    }
}
