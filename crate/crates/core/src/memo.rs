use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A shared cache that behaves as if absent: values are computed outside the
/// lock, so recursive lookups never deadlock, and a racing insert of the same
/// key stores an equal value.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Self {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.read().unwrap_or_else(|e| e.into_inner()).get(key) {
            return v.clone();
        }
        let value = compute();
        self.map
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursive_lookup_does_not_deadlock() {
        let memo: Memo<u32, u64> = Memo::new();
        fn fib(m: &Memo<u32, u64>, n: u32) -> u64 {
            m.get_or_insert_with(&n, || {
                if n < 2 {
                    n as u64
                } else {
                    fib(m, n - 1) + fib(m, n - 2)
                }
            })
        }
        assert_eq!(fib(&memo, 50), 12_586_269_025);
    }

    #[test]
    fn concurrent_inserts_agree() {
        let memo: Memo<u32, u32> = Memo::new();
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| {
                    for k in 0..100 {
                        assert_eq!(memo.get_or_insert_with(&k, || k * k), k * k);
                    }
                });
            }
        });
    }
}
