//! Suffix automaton over small-alphabet symbol sequences, used to count
//! distinct factors per length in time near-linear in the word length.
//!
//! Each non-initial state recognizes the factors whose lengths lie in
//! `(len(link(state)), len(state)]`, and distinct states recognize disjoint
//! factor sets, so the per-length distinct-factor counts follow from one
//! difference array over those intervals.

struct State {
    len: u32,
    link: i32,
    trans: Vec<(u8, u32)>,
}

impl State {
    fn get(&self, c: u8) -> Option<u32> {
        self.trans.iter().find(|&&(tc, _)| tc == c).map(|&(_, t)| t)
    }

    fn set(&mut self, c: u8, to: u32) {
        for entry in self.trans.iter_mut() {
            if entry.0 == c {
                entry.1 = to;
                return;
            }
        }
        self.trans.push((c, to));
    }
}

pub struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
}

impl SuffixAutomaton {
    pub fn build(symbols: &[u8]) -> Self {
        let mut sam = SuffixAutomaton {
            states: vec![State { len: 0, link: -1, trans: Vec::new() }],
            last: 0,
        };
        sam.states.reserve(2 * symbols.len());
        for &c in symbols {
            sam.extend(c);
        }
        sam
    }

    fn extend(&mut self, c: u8) {
        let cur = self.states.len() as u32;
        let cur_len = self.states[self.last as usize].len + 1;
        self.states.push(State { len: cur_len, link: -1, trans: Vec::new() });
        let mut p = self.last as i32;
        while p >= 0 && self.states[p as usize].get(c).is_none() {
            self.states[p as usize].set(c, cur);
            p = self.states[p as usize].link;
        }
        if p < 0 {
            self.states[cur as usize].link = 0;
        } else {
            let q = self.states[p as usize].get(c).unwrap();
            if self.states[p as usize].len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q as i32;
            } else {
                let clone = self.states.len() as u32;
                self.states.push(State {
                    len: self.states[p as usize].len + 1,
                    link: self.states[q as usize].link,
                    trans: self.states[q as usize].trans.clone(),
                });
                while p >= 0 && self.states[p as usize].get(c) == Some(q) {
                    self.states[p as usize].set(c, clone);
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone as i32;
                self.states[cur as usize].link = clone as i32;
            }
        }
        self.last = cur;
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Distinct-factor counts `P(n)` for `n = 0..=n_max`, with `P(0) = 1`.
    pub fn factor_counts(&self, n_max: usize) -> Vec<u64> {
        let mut diff = vec![0i64; n_max + 2];
        for state in &self.states[1..] {
            let min_len = (self.states[state.link as usize].len + 1) as usize;
            if min_len > n_max {
                continue;
            }
            let max_len = (state.len as usize).min(n_max);
            diff[min_len] += 1;
            diff[max_len + 1] -= 1;
        }
        let mut counts = vec![0u64; n_max + 1];
        counts[0] = 1;
        let mut running = 0i64;
        for n in 1..=n_max {
            running += diff[n];
            counts[n] = running as u64;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn naive_counts(symbols: &[u8], n_max: usize) -> Vec<u64> {
        let mut counts = vec![0u64; n_max + 1];
        counts[0] = 1;
        for n in 1..=n_max {
            let set: HashSet<&[u8]> = symbols.windows(n).collect();
            counts[n] = set.len() as u64;
        }
        counts
    }

    #[test]
    fn matches_naive_on_small_words() {
        let words: &[&[u8]] = &[
            b"abaababaabaab",
            b"aaaaaaa",
            b"abcabcabc",
            b"abacabadabacaba",
            b"a",
        ];
        for w in words {
            let sam = SuffixAutomaton::build(w);
            let n_max = w.len() - 1;
            assert_eq!(sam.factor_counts(n_max), naive_counts(w, n_max), "word {w:?}");
        }
    }

    #[test]
    fn exhaustive_binary_words() {
        for len in 1..=12usize {
            for bits in 0..(1u32 << len) {
                let w: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                let sam = SuffixAutomaton::build(&w);
                assert_eq!(sam.factor_counts(len), naive_counts(&w, len));
            }
        }
    }
}
