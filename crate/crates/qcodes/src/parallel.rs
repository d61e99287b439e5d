//! Threaded enumeration: the Gray-code index range is split into equal
//! chunks, each worker fills a private histogram, and the histograms are
//! summed in chunk order, so results do not depend on scheduling.

use std::thread;

use qcodes_core::distance::{histogram_range, Histogram};
use qcodes_core::QVec;

// Spans smaller than this are enumerated on the calling thread.
const MIN_PARALLEL_WORDS: u64 = 1 << 14;

#[derive(Clone, Copy, Debug)]
pub struct Threaded {
    pub threads: usize,
}

impl Threaded {
    pub fn new(threads: usize) -> Threaded {
        Threaded {
            threads: threads.max(1),
        }
    }

    pub fn available() -> Threaded {
        Threaded::new(thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
    }
}

impl Histogram for Threaded {
    fn histogram(&self, gens: &[QVec], n: usize, weight: fn(&QVec) -> usize) -> Vec<u64> {
        let total = 1u64 << gens.len();
        if self.threads == 1 || total < MIN_PARALLEL_WORDS {
            return histogram_range(gens, n, 0, total, weight);
        }
        let chunks = self.threads as u64;
        let step = total.div_ceil(chunks);
        let parts: Vec<Vec<u64>> = thread::scope(|s| {
            let handles: Vec<_> = (0..chunks)
                .map(|c| {
                    let start = (c * step).min(total);
                    let end = ((c + 1) * step).min(total);
                    s.spawn(move || histogram_range(gens, n, start, end, weight))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut hist = vec![0u64; 2 * n + 1];
        for part in parts {
            for (acc, x) in hist.iter_mut().zip(part) {
                *acc += x;
            }
        }
        hist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcodes_core::codes::build_code;
    use qcodes_core::distance::Serial;
    use qcodes_core::FieldContext;

    #[test]
    fn matches_serial() {
        let ctx = FieldContext::build(2, None).unwrap();
        let g = build_code(1, 2, &ctx).unwrap().generator_matrix();
        let gens = g.binary_generators();
        let serial = Serial.histogram(&gens, 15, QVec::weight);
        for t in [2, 3, 7] {
            assert_eq!(Threaded::new(t).histogram(&gens, 15, QVec::weight), serial);
        }
        assert_eq!(serial.iter().sum::<u64>(), 1 << 14);
    }
}
