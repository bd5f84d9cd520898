//! The Hurwitz action of the braid group B_2m on integer boundary vectors:
//! sigma_i sends (..., a_i, a_{i+1}, ...) to (..., a_{i+1}, 2a_{i+1} - a_i, ...).
//! Provides the action itself, an orbit-equivalence decision through the
//! complete invariants (alternating sum, difference gcd, residue multiset),
//! witness-producing normal forms, an orbit-connecting search, and a
//! breadth-first oracle.
//!
//! The witness searches are heuristic (greedy descent plus bounded
//! bidirectional search); every returned word is mechanically checked by
//! replaying the action, so a wrong witness can never escape. A search that
//! stalls reports a budget error instead of guessing.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::vectors::BoundaryVector;

/// One braid generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    /// Generator index in 1..=strands-1.
    pub index: usize,
    pub inverse: bool,
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

/// A word in the generators of the braid group on `strands` strands,
/// treated as a free word acting on vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters reversed with signs negated; acting by a word and then its
    /// inverse is the identity.
    pub fn inverse(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| BraidLetter { index: l.index, inverse: !l.inverse })
            .collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { word: other.strands, vector: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Parses whitespace-separated tokens like "s3 s1^-1". An empty or
    /// all-whitespace string is the identity word.
    pub fn parse(input: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in input.split_whitespace() {
            let (body, inverse) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let index = body
                .strip_prefix('s')
                .and_then(|i| i.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad braid letter {tok:?}")))?;
            letters.push(BraidLetter { index, inverse });
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", toks.join(" "))
    }
}

fn require_integers(v: &BoundaryVector) -> Result<()> {
    match v.ring() {
        RingSpec::Integers => Ok(()),
        RingSpec::ModP { p } => Err(Error::IntegersRequired(p)),
    }
}

/// Applies a single generator: sign +1 sends (a_i, a_{i+1}) to
/// (a_{i+1}, 2a_{i+1} - a_i), sign -1 sends it to (2a_i - a_{i+1}, a_i).
pub fn act_gen(v: &BoundaryVector, index: usize, sign: i8) -> Result<BoundaryVector> {
    require_integers(v)?;
    let n = v.len();
    if index == 0 || index >= n {
        return Err(Error::IndexOutOfRange { index, strands: n });
    }
    let mut entries = v.entries().to_vec();
    apply_letter(&mut entries, index, sign < 0);
    BoundaryVector::new(RingSpec::Integers, entries)
}

/// Left-to-right composition of the generator action over a word.
pub fn act(v: &BoundaryVector, word: &BraidWord) -> Result<BoundaryVector> {
    require_integers(v)?;
    if word.strands() != v.len() {
        return Err(Error::StrandMismatch { word: word.strands(), vector: v.len() });
    }
    let mut entries = v.entries().to_vec();
    for l in word.letters() {
        apply_letter(&mut entries, l.index, l.inverse);
    }
    BoundaryVector::new(RingSpec::Integers, entries)
}

fn apply_letter(entries: &mut [BigInt], index: usize, inverse: bool) {
    let (x, y) = (entries[index - 1].clone(), entries[index].clone());
    if inverse {
        entries[index - 1] = BigInt::from(2) * &x - &y;
        entries[index] = x;
    } else {
        entries[index] = BigInt::from(2) * &y - &x;
        entries[index - 1] = y;
    }
}

/// Decides orbit equivalence. Trivial vectors are fixed points, so if either
/// side is trivial the orbits coincide exactly when the vectors are equal;
/// otherwise equivalence holds iff the alternating sum, the difference gcd,
/// and the residue multiset all agree.
pub fn orbit_equivalent(v: &BoundaryVector, u: &BoundaryVector) -> Result<bool> {
    require_integers(v)?;
    require_integers(u)?;
    if v.len() != u.len() {
        return Err(Error::LengthMismatch(v.len(), u.len()));
    }
    if v.is_trivial() || u.is_trivial() {
        return Ok(v == u);
    }
    let a = v.invariants();
    let b = u.invariants();
    Ok(a.delta == b.delta && a.d == b.d && a.m_multiset == b.m_multiset)
}

fn equivalence_failure(v: &BoundaryVector, u: &BoundaryVector) -> String {
    let a = v.invariants();
    let b = u.invariants();
    if a.delta != b.delta {
        format!("alternating sums {} and {} differ", a.delta, b.delta)
    } else if a.d != b.d {
        "difference gcds differ".into()
    } else if a.m_multiset != b.m_multiset {
        "residue multisets mod 2d differ".into()
    } else {
        "trivial vector is a fixed point".into()
    }
}

// ---------------------------------------------------------------------------
// Search machinery.
//
// A "macro move" (pos, k) applies sigma_{pos+1}^k, which translates the
// adjacent pair (s[pos], s[pos+1]) by k times its difference and touches
// nothing else. Macro moves capture the Euclidean steps that single-letter
// search cannot reach in feasible depth.
// ---------------------------------------------------------------------------

/// Budgets for the witness searches. All searches are deterministic for a
/// fixed budget.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Cap on greedy descent steps.
    pub greedy_steps: usize,
    /// Per-side depth of the bidirectional macro-move search.
    pub macro_depth: usize,
    /// Total depth of the single-letter fallback search.
    pub micro_depth: usize,
    /// Per-side node cap for the bounded searches.
    pub node_cap: usize,
    /// Width of the beam search used for long structured paths.
    pub beam_width: usize,
    /// Depth of the beam search.
    pub beam_depth: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            greedy_steps: 64,
            macro_depth: 4,
            micro_depth: 14,
            node_cap: 200_000,
            beam_width: 600,
            beam_depth: 64,
        }
    }
}

impl SearchBudget {
    /// Scales the default budget from a single depth knob.
    pub fn from_depth(depth: usize) -> Self {
        SearchBudget {
            greedy_steps: depth.max(16) * 4,
            macro_depth: (depth / 3).max(3),
            micro_depth: depth.max(4),
            node_cap: 200_000,
            beam_width: 600,
            beam_depth: depth.max(16) * 4,
        }
    }
}

type State = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
struct MacroMove {
    pos: usize, // 0-based left index of the pair
    k: BigInt,
}

fn apply_macro(state: &mut State, mv: &MacroMove) {
    let c = &state[mv.pos + 1] - &state[mv.pos];
    let shift = &c * &mv.k;
    state[mv.pos] += &shift;
    state[mv.pos + 1] += shift;
}

fn macro_letters(strands: usize, path: &[MacroMove]) -> BraidWord {
    let mut letters = Vec::new();
    for mv in path {
        let count = mv.k.abs().to_u64_digits().1;
        let count = if count.is_empty() { 0 } else { count[0] as usize };
        let letter = BraidLetter { index: mv.pos + 1, inverse: mv.k.is_negative() };
        letters.extend(std::iter::repeat(letter).take(count));
    }
    BraidWord { strands, letters }
}

const MACRO_K_CAP: i64 = 100_000;

/// Candidate exponents for the pair at `pos`: unit steps, Euclidean
/// quotient steps that reduce a neighbouring difference modulo the pair
/// difference, and shifts that land an endpoint on a nearby useful value
/// (0, 1, the matching entry of `target` when one is supplied).
fn macro_candidates(state: &State, pos: usize, target: Option<&State>) -> Vec<BigInt> {
    let n = state.len();
    let c = &state[pos + 1] - &state[pos];
    if c.is_zero() {
        return Vec::new();
    }
    let mut ks: Vec<BigInt> = Vec::new();
    let mut push = |k: BigInt| {
        if !k.is_zero() && k.abs() <= BigInt::from(MACRO_K_CAP) && !ks.contains(&k) {
            ks.push(k);
        }
    };
    push(BigInt::one());
    push(-BigInt::one());
    // Quotient steps: move s[slot] as close as possible to `goal`
    // (both floor and ceiling, so remainders of either sign are covered).
    let mut steer = |value: &BigInt, goal: &BigInt| {
        let q = (goal - value).div_floor(&c);
        push(q.clone());
        push(q + 1);
    };
    let zero = BigInt::zero();
    let one = BigInt::one();
    steer(&state[pos], &zero);
    steer(&state[pos], &one);
    steer(&state[pos + 1], &zero);
    steer(&state[pos + 1], &one);
    if pos > 0 {
        let left = state[pos - 1].clone();
        steer(&state[pos], &left);
    }
    if pos + 2 < n {
        let right = state[pos + 2].clone();
        steer(&state[pos + 1], &right);
    }
    if let Some(t) = target {
        let (ta, tb) = (t[pos].clone(), t[pos + 1].clone());
        steer(&state[pos], &ta);
        steer(&state[pos + 1], &tb);
    }
    ks
}

fn l1_distance(a: &State, b: &State) -> BigInt {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Positions are cheap to fix (equal pairs commute past anything) but values
/// are not, so the beam ranks states by the distance between sorted entry
/// multisets first and positional distance second.
fn beam_score(a: &State, b: &State) -> BigInt {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort();
    sb.sort();
    let multiset: BigInt = sa.iter().zip(&sb).map(|(x, y)| (x - y).abs()).sum();
    multiset * 16 + l1_distance(a, b)
}

/// Deterministic condensation: a left-to-right sweep of Euclidean steps on
/// adjacent differences that leaves the vector as a run of equal adjacent
/// pairs followed by two free entries. Each window Euclid only disturbs
/// entries to its right, so the sweep terminates with the gcd bookkeeping
/// of an ordinary Euclidean algorithm.
fn condense(state: &mut State) -> Vec<MacroMove> {
    let n = state.len();
    let mut path = Vec::new();
    let mut apply = |state: &mut State, pos: usize, k: BigInt| {
        let mv = MacroMove { pos, k };
        apply_macro(state, &mv);
        path.push(mv);
    };
    let mut p = 0;
    while n - p >= 3 {
        loop {
            let cp = &state[p + 1] - &state[p];
            if cp.is_zero() {
                break;
            }
            let cq = &state[p + 2] - &state[p + 1];
            if cq.is_zero() {
                // Shift the residual difference one slot to the right:
                // (c, 0) -> (c, -c) -> (0, -c).
                apply(state, p, BigInt::one());
                apply(state, p + 1, BigInt::one());
                break;
            }
            if cp.abs() >= cq.abs() {
                // c_p mod c_{p+1}, via the pair at p+1.
                let q = cp.div_floor(&cq);
                if q.is_zero() {
                    // |cp| == |cq| with opposite signs: cancel directly.
                    apply(state, p + 1, BigInt::one());
                } else {
                    apply(state, p + 1, -q);
                }
            } else {
                // c_{p+1} mod c_p, via the pair at p.
                let q = cq.div_floor(&cp);
                apply(state, p, q);
            }
        }
        p += 2;
    }
    path
}

/// Greedy descent: repeatedly applies the macro move that strictly decreases
/// the L1 distance to the target the most. Returns the path taken (possibly
/// stopping short of the target).
fn greedy_descent(state: &mut State, target: &State, budget: &SearchBudget) -> Vec<MacroMove> {
    let mut path = Vec::new();
    let mut dist = l1_distance(state, target);
    for _ in 0..budget.greedy_steps {
        if dist.is_zero() {
            break;
        }
        let mut best: Option<(BigInt, MacroMove)> = None;
        for pos in 0..state.len() - 1 {
            for k in macro_candidates(state, pos, Some(target)) {
                let mv = MacroMove { pos, k };
                let mut next = state.clone();
                apply_macro(&mut next, &mv);
                let nd = l1_distance(&next, target);
                if nd < dist && best.as_ref().map_or(true, |(bd, _)| nd < *bd) {
                    best = Some((nd, mv));
                }
            }
        }
        match best {
            Some((nd, mv)) => {
                apply_macro(state, &mv);
                path.push(mv);
                dist = nd;
            }
            None => break,
        }
    }
    path
}

/// Beam search toward an explicit target. Keeps the `beam_width` best states
/// by L1 distance at each depth, which rides out the plateaus that stall the
/// strict greedy descent. Deterministic: children are ranked by distance with
/// generation order breaking ties.
fn beam_search(from: &State, to: &State, budget: &SearchBudget) -> Option<Vec<MacroMove>> {
    if from == to {
        return Some(Vec::new());
    }
    struct Node {
        state: State,
        parent: usize,
        mv: Option<MacroMove>,
    }
    let mut arena = vec![Node { state: from.clone(), parent: 0, mv: None }];
    let mut visited: HashMap<State, ()> = HashMap::new();
    visited.insert(from.clone(), ());
    let mut layer: Vec<usize> = vec![0];
    let reconstruct = |arena: &Vec<Node>, mut at: usize| {
        let mut path = Vec::new();
        while let Some(mv) = &arena[at].mv {
            path.push(mv.clone());
            at = arena[at].parent;
        }
        path.reverse();
        path
    };
    for _ in 0..budget.beam_depth {
        let mut children: Vec<(BigInt, usize)> = Vec::new();
        for &ni in &layer {
            let state = arena[ni].state.clone();
            for pos in 0..state.len() - 1 {
                for k in macro_candidates(&state, pos, Some(to)) {
                    let mv = MacroMove { pos, k };
                    let mut next = state.clone();
                    apply_macro(&mut next, &mv);
                    if visited.contains_key(&next) {
                        continue;
                    }
                    visited.insert(next.clone(), ());
                    let done = &next == to;
                    let dist = beam_score(&next, to);
                    let id = arena.len();
                    arena.push(Node { state: next, parent: ni, mv: Some(mv) });
                    if done {
                        return Some(reconstruct(&arena, id));
                    }
                    children.push((dist, id));
                }
            }
        }
        if children.is_empty() || visited.len() > budget.node_cap {
            return None;
        }
        children.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        children.truncate(budget.beam_width);
        layer = children.into_iter().map(|(_, id)| id).collect();
    }
    None
}

/// Exhaustive single-letter search restricted to states whose entries stay
/// inside a value box. The box makes the reachable set finite, so this is a
/// complete decision procedure for paths that never leave the box; the box
/// is sized generously relative to the endpoints. Used for small vectors
/// where entries pack into a u128 key.
fn box_bfs(from: &State, to: &State, cap: usize) -> Option<Vec<MacroMove>> {
    let n = from.len();
    if n > 6 {
        return None;
    }
    let mut bound: i64 = 8;
    for x in from.iter().chain(to.iter()) {
        let x = i64::try_from(x).ok()?;
        bound = bound.max(x.abs());
    }
    let bound = bound.checked_mul(4)?.checked_add(32)?;
    if bound >= (1 << 20) {
        return None;
    }
    let pack = |s: &[i64]| -> u128 {
        let mut key: u128 = 0;
        for &x in s {
            key = (key << 21) | ((x + (1 << 20)) as u128);
        }
        key
    };
    let small = |s: &State| -> Option<Vec<i64>> {
        s.iter().map(i64::try_from).collect::<std::result::Result<Vec<_>, _>>().ok()
    };
    let unpack = |key: u128| -> Vec<i64> {
        let mut out = vec![0i64; n];
        let mut k = key;
        for slot in out.iter_mut().rev() {
            *slot = (k & ((1 << 21) - 1)) as i64 - (1 << 20);
            k >>= 21;
        }
        out
    };
    let start = small(from)?;
    let goal = small(to)?;
    if start == goal {
        return Some(Vec::new());
    }
    let goal_key = pack(&goal);
    // Flat arena of (packed state, parent, move); states are re-derived from
    // the key to keep the per-node footprint small.
    let mut nodes: Vec<(u128, u32, (u8, i8))> = vec![(pack(&start), 0, (0, 0))];
    let mut seen: HashMap<u128, ()> = HashMap::new();
    seen.insert(pack(&start), ());
    let mut head = 0;
    while head < nodes.len() && nodes.len() < cap {
        let state = unpack(nodes[head].0);
        for pos in 0..n - 1 {
            let c = state[pos + 1] - state[pos];
            if c == 0 {
                continue;
            }
            for k in [1i8, -1] {
                let shift = c * k as i64;
                let a = state[pos] + shift;
                let b = state[pos + 1] + shift;
                if a.abs() > bound || b.abs() > bound {
                    continue;
                }
                let mut next = state.clone();
                next[pos] = a;
                next[pos + 1] = b;
                let key = pack(&next);
                if seen.contains_key(&key) {
                    continue;
                }
                seen.insert(key, ());
                let id = nodes.len();
                nodes.push((key, head as u32, (pos as u8, k)));
                if key == goal_key {
                    let mut path = Vec::new();
                    let mut at = id;
                    while at != 0 {
                        let (_, parent, (pos, k)) = nodes[at];
                        path.push(MacroMove { pos: pos as usize, k: BigInt::from(k) });
                        at = parent as usize;
                    }
                    path.reverse();
                    return Some(path);
                }
            }
        }
        head += 1;
    }
    None
}

/// Basic search ladder used on whole vectors and on 4-entry edge windows:
/// greedy descent, short bidirectional macro search, a boxed exhaustive
/// search for small windows, then beam.
fn path_search_basic(from: &State, to: &State, budget: &SearchBudget) -> Option<Vec<MacroMove>> {
    let mut state = from.clone();
    let mut path = greedy_descent(&mut state, to, budget);
    if &state == to {
        return Some(path);
    }
    if let Some(rest) = bidirectional_search(&state, to, budget.macro_depth, budget.node_cap, false)
    {
        path.extend(rest);
        return Some(path);
    }
    if state.len() <= 5 {
        if let Some(rest) = box_bfs(&state, to, budget.node_cap.saturating_mul(16)) {
            path.extend(rest);
            return Some(path);
        }
    }
    beam_search(&state, to, budget).map(|rest| {
        path.extend(rest);
        path
    })
}

/// Exact transposition of two adjacent equal pairs: (u,u,w,w) -> (w,w,u,u).
/// Each u passes under both w reflections, so the values come back intact.
fn block_swap(state: &mut State, b: usize, path: &mut Vec<MacroMove>) {
    for pos in [b + 1, b, b + 2, b + 1] {
        let mv = MacroMove { pos, k: BigInt::one() };
        apply_macro(state, &mv);
        path.push(mv);
    }
}

/// Hurwitz move at the level of equal pairs: (w,w,z,z) -> (z,z,2z-w,2z-w)
/// for `inverse` false, (w,w,z,z) -> (2w-z,2w-z,w,w) for `inverse` true.
fn meta_sigma(state: &mut State, b: usize, inverse: bool, path: &mut Vec<MacroMove>) {
    let word: [(usize, i64); 4] = if inverse {
        [(b + 1, 1), (b + 2, 1), (b, -1), (b + 1, -1)]
    } else {
        [(b + 1, 1), (b, 1), (b + 2, -1), (b + 1, -1)]
    };
    for (pos, k) in word {
        let mv = MacroMove { pos, k: BigInt::from(k) };
        apply_macro(state, &mv);
        path.push(mv);
    }
}

/// Necessary condition for two window slices to be connectable in place:
/// the conserved data (alternating sum, difference gcd, residue multiset)
/// must agree. Conservation holds for windows of any length.
fn windows_compatible(a: &[BigInt], b: &[BigInt]) -> bool {
    if a == b {
        return true;
    }
    let delta = |s: &[BigInt]| -> BigInt {
        s.iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 0 { x.clone() } else { -x })
            .sum()
    };
    if delta(a) != delta(b) {
        return false;
    }
    let gcd_diffs = |s: &[BigInt]| -> BigInt {
        let mut g = BigInt::zero();
        for x in &s[1..] {
            g = g.gcd(&(x - &s[0]));
        }
        g
    };
    let (da, db) = (gcd_diffs(a), gcd_diffs(b));
    if da != db {
        return false;
    }
    if da.is_zero() {
        return a == b;
    }
    let two_d = &da * 2;
    let mut ra: Vec<BigInt> = a.iter().map(|x| x.mod_floor(&two_d)).collect();
    let mut rb: Vec<BigInt> = b.iter().map(|x| x.mod_floor(&two_d)).collect();
    ra.sort();
    rb.sort();
    ra == rb
}

/// Candidate rewrites for an edge window, filtered to the window's orbit.
/// `goal_only` restricts to the wanted slice of the global spike; otherwise
/// exploratory reshapes are offered for 4-entry windows (a zero-anchored
/// spike, which feeds zeros into the prefix, and the window's own anchored
/// spike).
fn window_targets(window: &State, wanted: &State, goal_only: bool) -> Vec<State> {
    let mut out: Vec<State> = Vec::new();
    let all_equal = window.iter().all(|x| *x == window[0]);
    if all_equal {
        return out;
    }
    let mut consider = |cand: State| {
        if cand != *window && !out.contains(&cand) && windows_compatible(window, &cand) {
            out.push(cand);
        }
    };
    if goal_only {
        consider(wanted.clone());
        return out;
    }
    if window.len() == 4 {
        let wv = match BoundaryVector::new(RingSpec::Integers, window.clone()) {
            Ok(v) => v,
            Err(_) => return out,
        };
        let dec = match wv.associated() {
            Ok(d) => d,
            Err(_) => return out,
        };
        let (wspike, _, _) = canonical_target(4, &dec.w.delta(), dec.w.odd_count());
        let zero_anchored: State = wspike.iter().map(|b| &dec.d * b).collect();
        consider(zero_anchored);
        let anchored: State = wspike.iter().map(|b| &dec.a1 + &dec.d * b).collect();
        consider(anchored);
    }
    out
}

/// Deterministic drive toward an explicit target: condensation into equal
/// pairs, then repeated canonicalization of the leftmost and rightmost
/// 4-entry windows (which enjoy full braid control at the edges), rotating
/// pair blocks in between so every pair gets to interact with the free
/// entries. Requires difference gcd 1.
fn drive_to_target(start: &State, spike: &State, budget: &SearchBudget) -> Option<Vec<MacroMove>> {
    let n = start.len();
    if n < 4 {
        return None;
    }
    let v = BoundaryVector::new(RingSpec::Integers, start.clone()).ok()?;
    let d = v.diff_gcd()?;
    if !d.is_one() {
        return None;
    }
    let spike = spike.clone();
    let mut state = start.clone();
    let mut path = Vec::new();
    let pair_count = (n - 2) / 2;
    let mut rotation = 0usize;
    let trace = std::env::var_os("FT_TRACE").is_some();
    let mut seen: HashMap<State, ()> = HashMap::new();
    for round in 0..(8 * pair_count + 8) {
        if trace {
            eprintln!("drive round {round}: {}", join_state(&state));
        }
        if state == spike {
            return Some(path);
        }
        if round % 2 == 0 {
            path.extend(condense(&mut state));
            if state == spike {
                return Some(path);
            }
        }
        seen.insert(state.clone(), ());
        let mut progressed = false;
        let mut spans: Vec<(usize, usize)> = vec![(n - 4, 4), (0, 4)];
        if n > 5 {
            spans.push((n - 5, 5));
            spans.push((0, 5));
        }
        'pass: for goal_only in [true, false] {
            for &(offset, size) in &spans {
                let window: State = state[offset..offset + size].to_vec();
                let wanted: State = spike[offset..offset + size].to_vec();
                for wtarget in window_targets(&window, &wanted, goal_only) {
                    // Skip rewrites that would revisit an earlier state.
                    let mut result = state.clone();
                    result[offset..offset + size].clone_from_slice(&wtarget);
                    if seen.contains_key(&result) {
                        continue;
                    }
                    if trace {
                        eprintln!(
                            "  window@{offset}+{size} {} -> {}",
                            join_state(&window),
                            join_state(&wtarget)
                        );
                    }
                    if let Some(sub) = path_search_basic(&window, &wtarget, budget) {
                        for mv in sub {
                            let shifted = MacroMove { pos: mv.pos + offset, k: mv.k };
                            apply_macro(&mut state, &shifted);
                            path.push(shifted);
                        }
                        progressed = true;
                        break 'pass;
                    }
                }
            }
        }
        if state == spike {
            return Some(path);
        }
        if !progressed {
            // Reshuffle the pair run: exact transpositions and pair-level
            // Hurwitz moves at successive block boundaries, so different
            // values reach the windows.
            if pair_count < 2 {
                break;
            }
            let boundaries = pair_count - 1;
            let mut done = false;
            for _ in 0..3 * boundaries {
                let op = rotation % (3 * boundaries);
                rotation += 1;
                let b = 2 * (op / 3);
                if state[b] != state[b + 1] || state[b + 2] != state[b + 3] {
                    continue;
                }
                match op % 3 {
                    0 => block_swap(&mut state, b, &mut path),
                    1 => meta_sigma(&mut state, b, false, &mut path),
                    _ => meta_sigma(&mut state, b, true, &mut path),
                }
                done = true;
                break;
            }
            if !done {
                break;
            }
        }
    }
    if state == spike {
        return Some(path);
    }
    None
}

/// Mirror image of a macro path: reversing the vector sends the move at
/// `pos` with exponent k to the move at n-2-pos with exponent -k.
fn drive_with_reversal(
    start: &State,
    target: &State,
    budget: &SearchBudget,
) -> Option<Vec<MacroMove>> {
    if let Some(path) = drive_to_target(start, target, budget) {
        return Some(path);
    }
    let n = start.len();
    let rs: State = start.iter().rev().cloned().collect();
    let rt: State = target.iter().rev().cloned().collect();
    drive_to_target(&rs, &rt, budget).map(|path| {
        path.into_iter()
            .map(|mv| MacroMove { pos: n - 2 - mv.pos, k: -mv.k })
            .collect()
    })
}

struct SideNode {
    state: State,
    parent: usize,
    mv: Option<MacroMove>,
}

struct Side {
    nodes: Vec<SideNode>,
    index: HashMap<State, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(root: State) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Side {
            nodes: vec![SideNode { state: root, parent: 0, mv: None }],
            index,
            frontier: vec![0],
            depth: 0,
        }
    }

    fn path_from_root(&self, mut at: usize) -> Vec<MacroMove> {
        let mut path = Vec::new();
        while let Some(mv) = &self.nodes[at].mv {
            path.push(mv.clone());
            at = self.nodes[at].parent;
        }
        path.reverse();
        path
    }
}

fn inverse_path(path: &[MacroMove]) -> Vec<MacroMove> {
    path.iter()
        .rev()
        .map(|mv| MacroMove { pos: mv.pos, k: -&mv.k })
        .collect()
}

/// Bidirectional bounded search over a move family. `unit_only` restricts the
/// branching to single-letter moves. Returns a macro path from `from` to `to`
/// if one is found within the depth and node budgets.
fn bidirectional_search(
    from: &State,
    to: &State,
    per_side_depth: usize,
    node_cap: usize,
    unit_only: bool,
) -> Option<Vec<MacroMove>> {
    if from == to {
        return Some(Vec::new());
    }
    let mut fwd = Side::new(from.clone());
    let mut bwd = Side::new(to.clone());
    loop {
        if fwd.frontier.is_empty() && bwd.frontier.is_empty() {
            return None;
        }
        // Expand the smaller active frontier first; stop once both sides hit
        // their depth limits.
        let expand_fwd = {
            let f_ok = fwd.depth < per_side_depth
                && !fwd.frontier.is_empty()
                && fwd.nodes.len() < node_cap;
            let b_ok = bwd.depth < per_side_depth
                && !bwd.frontier.is_empty()
                && bwd.nodes.len() < node_cap;
            match (f_ok, b_ok) {
                (false, false) => return None,
                (true, false) => true,
                (false, true) => false,
                (true, true) => fwd.frontier.len() <= bwd.frontier.len(),
            }
        };
        let (side, other) = if expand_fwd { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let frontier = std::mem::take(&mut side.frontier);
        let mut next_frontier = Vec::new();
        let mut meet: Option<(usize, usize)> = None; // (this side node, other side node)
        'expansion: for &ni in &frontier {
            let state = side.nodes[ni].state.clone();
            for pos in 0..state.len() - 1 {
                let ks = if unit_only {
                    let c = &state[pos + 1] - &state[pos];
                    if c.is_zero() {
                        Vec::new()
                    } else {
                        vec![BigInt::one(), -BigInt::one()]
                    }
                } else {
                    let goal = if expand_fwd { to } else { from };
                    macro_candidates(&state, pos, Some(goal))
                };
                for k in ks {
                    let mv = MacroMove { pos, k };
                    let mut next = state.clone();
                    apply_macro(&mut next, &mv);
                    if side.index.contains_key(&next) {
                        continue;
                    }
                    let id = side.nodes.len();
                    side.index.insert(next.clone(), id);
                    let hit = other.index.get(&next).copied();
                    side.nodes.push(SideNode { state: next, parent: ni, mv: Some(mv) });
                    next_frontier.push(id);
                    if let Some(oid) = hit {
                        meet = Some((id, oid));
                        break 'expansion;
                    }
                    if side.nodes.len() >= node_cap {
                        break 'expansion;
                    }
                }
            }
        }
        side.depth += 1;
        side.frontier = next_frontier;
        if let Some((sid, oid)) = meet {
            let (fid, bid) = if expand_fwd { (sid, oid) } else { (oid, sid) };
            let mut path = fwd.path_from_root(fid);
            path.extend(inverse_path(&bwd.path_from_root(bid)));
            return Some(path);
        }
    }
}

/// Full path search: greedy descent, then bidirectional macro search from the
/// stall point, then a single-letter fallback.
fn path_search(from: &[BigInt], to: &[BigInt], budget: &SearchBudget) -> Result<Vec<MacroMove>> {
    let target: State = to.to_vec();
    let mut state: State = from.to_vec();
    let mut path = greedy_descent(&mut state, &target, budget);
    if state == target {
        return Ok(path);
    }
    if let Some(rest) =
        bidirectional_search(&state, &target, budget.macro_depth, budget.node_cap, false)
    {
        path.extend(rest);
        return Ok(path);
    }
    if let Some(rest) = box_bfs(&state, &target, budget.node_cap) {
        path.extend(rest);
        return Ok(path);
    }
    // Structured drive through condensation and edge windows.
    if let Some(rest) = drive_with_reversal(&state, &target, budget) {
        path.extend(rest);
        return Ok(path);
    }
    if let Some(rest) = beam_search(&state, &target, budget) {
        path.extend(rest);
        return Ok(path);
    }
    if let Some(rest) = bidirectional_search(
        &state,
        &target,
        budget.micro_depth.div_ceil(2),
        budget.node_cap,
        true,
    ) {
        path.extend(rest);
        return Ok(path);
    }
    Err(Error::BudgetExhausted(format!(
        "no word found from ({}) to ({}) within budget",
        join_state(from),
        join_state(to)
    )))
}

fn join_state(s: &[BigInt]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// Normal forms.
// ---------------------------------------------------------------------------

/// Shape of a reduced orbit representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalShape {
    /// (a, ..., a, a + lambda*d at position i, a + d, ..., a + d), 1 < i < 2m.
    GeneralForm { a: BigInt, lambda: BigInt, i: usize, d: BigInt },
    /// (a repeated 2r, b repeated 2s) with r + s = m.
    DeltaZeroForm { a: BigInt, b: BigInt, r: usize, s: usize },
}

/// A normal form together with an action-verified witness braid.
#[derive(Debug, Clone)]
pub struct NormalFormResult {
    pub normal: BoundaryVector,
    pub witness: BraidWord,
    pub shape: NormalShape,
}

impl NormalFormResult {
    fn checked(
        input: &BoundaryVector,
        witness: BraidWord,
        normal: BoundaryVector,
        shape: NormalShape,
    ) -> Result<Self> {
        let reached = act(input, &witness)?;
        assert_eq!(reached, normal, "witness does not reach the claimed normal form");
        match &shape {
            NormalShape::GeneralForm { a, lambda, i, d } => {
                let n = normal.len();
                assert!(1 < *i && *i < n, "spike position out of range");
                for (idx, val) in normal.entries().iter().enumerate() {
                    let expect = match (idx + 1).cmp(i) {
                        std::cmp::Ordering::Less => a.clone(),
                        std::cmp::Ordering::Equal => a + lambda * d,
                        std::cmp::Ordering::Greater => a + d,
                    };
                    assert_eq!(*val, expect, "general form shape violated");
                }
            }
            NormalShape::DeltaZeroForm { a, b, r, s } => {
                assert_eq!((*r + *s) * 2, normal.len(), "block lengths must cover the vector");
                for (idx, val) in normal.entries().iter().enumerate() {
                    let expect = if idx < 2 * r { a } else { b };
                    assert_eq!(val, expect, "block form shape violated");
                }
            }
        }
        Ok(NormalFormResult { normal, witness, shape })
    }
}

/// Canonical reduced representative of the orbit with alternating sum
/// `delta` and `q` odd entries: zeros, then a single spike, then ones.
/// Returns (entries, spike position i in 1..n, lambda).
fn canonical_target(n: usize, delta: &BigInt, q: usize) -> (State, usize, BigInt) {
    debug_assert!(q >= 1 && q < n);
    let (i, lambda) = if q == 1 {
        (n - 1, delta + 1)
    } else {
        (n - q + (q % 2), -delta)
    };
    debug_assert!(1 < i && i < n);
    let mut target = vec![BigInt::zero(); n];
    target[i - 1] = lambda.clone();
    for slot in target.iter_mut().skip(i) {
        *slot = BigInt::one();
    }
    (target, i, lambda)
}

/// Reduces the vector (which must have difference gcd 1) to the canonical
/// spike form, returning the macro path and the target reached.
fn reduce_to_canonical(
    entries: &[BigInt],
    budget: &SearchBudget,
) -> Result<(Vec<MacroMove>, State, usize, BigInt)> {
    let n = entries.len();
    let v = BoundaryVector::new(RingSpec::Integers, entries.to_vec())?;
    let delta = v.delta();
    let q = v.odd_count();
    let (target, i, lambda) = canonical_target(n, &delta, q);
    let path = path_search(entries, &target, budget)?;
    Ok((path, target, i, lambda))
}

pub fn normal_form_general(v: &BoundaryVector) -> Result<NormalFormResult> {
    normal_form_general_with_budget(v, &SearchBudget::default())
}

/// Finds an action-verified braid carrying `v` to the spike normal form
/// (a, ..., a, a + lambda*d, a + d, ..., a + d).
pub fn normal_form_general_with_budget(
    v: &BoundaryVector,
    budget: &SearchBudget,
) -> Result<NormalFormResult> {
    require_integers(v)?;
    if v.is_trivial() {
        return Err(Error::TrivialVector);
    }
    if v.m() < 2 {
        return Err(Error::RequiresMAtLeast2);
    }
    let dec = v.associated()?;
    let (path, target, i, lambda) = reduce_to_canonical(dec.w.entries(), budget)?;
    let witness = macro_letters(v.len(), &path);
    let normal_entries: State =
        target.iter().map(|b| &dec.a1 + &dec.d * b).collect();
    let normal = BoundaryVector::new(RingSpec::Integers, normal_entries)?;
    NormalFormResult::checked(
        v,
        witness,
        normal,
        NormalShape::GeneralForm { a: dec.a1, lambda, i, d: dec.d },
    )
}

pub fn normal_form_delta0(v: &BoundaryVector) -> Result<NormalFormResult> {
    normal_form_delta0_with_budget(v, &SearchBudget::default())
}

/// For vectors with vanishing alternating sum: finds an action-verified
/// braid carrying `v` to a two-block form (a, ..., a, b, ..., b) with even
/// block lengths.
pub fn normal_form_delta0_with_budget(
    v: &BoundaryVector,
    budget: &SearchBudget,
) -> Result<NormalFormResult> {
    require_integers(v)?;
    if !v.delta().is_zero() {
        return Err(Error::DeltaNonZero);
    }
    if v.is_trivial() {
        let a = v.entries()[0].clone();
        let shape = NormalShape::DeltaZeroForm { a: a.clone(), b: a, r: v.m(), s: 0 };
        return NormalFormResult::checked(
            v,
            BraidWord::identity(v.len()),
            v.clone(),
            shape,
        );
    }
    let dec = v.associated()?;
    let q = dec.w.odd_count();
    // Zero alternating sum forces an even number of odd entries, so the
    // canonical spike degenerates to two blocks.
    debug_assert!(q % 2 == 0);
    let (path, target, _i, lambda) = reduce_to_canonical(dec.w.entries(), budget)?;
    debug_assert!(lambda.is_zero());
    let witness = macro_letters(v.len(), &path);
    let normal_entries: State =
        target.iter().map(|b| &dec.a1 + &dec.d * b).collect();
    let normal = BoundaryVector::new(RingSpec::Integers, normal_entries)?;
    let n = v.len();
    let r = (n - q) / 2;
    let shape = NormalShape::DeltaZeroForm {
        a: dec.a1.clone(),
        b: &dec.a1 + &dec.d,
        r,
        s: q / 2,
    };
    NormalFormResult::checked(v, witness, normal, shape)
}

pub fn connect(v: &BoundaryVector, u: &BoundaryVector) -> Result<BraidWord> {
    connect_with_budget(v, u, &SearchBudget::default())
}

/// Produces a braid word carrying `v` to `u`, provided the orbit invariants
/// agree. The returned word is verified by replaying the action.
pub fn connect_with_budget(
    v: &BoundaryVector,
    u: &BoundaryVector,
    budget: &SearchBudget,
) -> Result<BraidWord> {
    if !orbit_equivalent(v, u)? {
        return Err(Error::NotEquivalent(equivalence_failure(v, u)));
    }
    let n = v.len();
    if v == u {
        return Ok(BraidWord::identity(n));
    }
    // Both are nontrivial now: equivalent trivial vectors are equal.
    let word = if n == 2 {
        let c = &v.entries()[1] - &v.entries()[0];
        let (t, r) = (&u.entries()[0] - &v.entries()[0]).div_rem(&c);
        debug_assert!(r.is_zero());
        macro_letters(2, &[MacroMove { pos: 0, k: t }])
    } else {
        let dec = v.associated()?;
        let ur: State = u
            .entries()
            .iter()
            .map(|a| {
                let (q, r) = (a - &dec.a1).div_rem(&dec.d);
                debug_assert!(r.is_zero(), "residue classes agree for equivalent vectors");
                q
            })
            .collect();
        let vr = dec.w.entries().to_vec();
        // A direct meet is usually short; fall back to joining through the
        // canonical form.
        let path = match bidirectional_search(&vr, &ur, 3, budget.node_cap / 4, false) {
            Some(p) => p,
            None => {
                let (p1, _, _, _) = reduce_to_canonical(&vr, budget)?;
                let (p2, _, _, _) = reduce_to_canonical(&ur, budget)?;
                let mut p = p1;
                p.extend(inverse_path(&p2));
                p
            }
        };
        macro_letters(n, &path)
    };
    let reached = act(v, &word)?;
    assert_eq!(reached, *u, "connect witness must reproduce the target");
    Ok(word)
}

// ---------------------------------------------------------------------------
// Breadth-first oracle.
// ---------------------------------------------------------------------------

/// Exhaustive bidirectional breadth-first search for a shortest witness of
/// length at most `max_depth`. `None` means no witness exists up to that
/// depth; it does not certify non-equivalence.
pub fn bfs_witness(
    v: &BoundaryVector,
    u: &BoundaryVector,
    max_depth: usize,
) -> Result<Option<BraidWord>> {
    require_integers(v)?;
    require_integers(u)?;
    if v.len() != u.len() {
        return Err(Error::LengthMismatch(v.len(), u.len()));
    }
    let n = v.len();
    if v == u {
        return Ok(Some(BraidWord::identity(n)));
    }
    let mut fwd = Side::new(v.entries().to_vec());
    let mut bwd = Side::new(u.entries().to_vec());
    let mut best: Option<(usize, usize, usize)> = None; // (total, fwd node, bwd node)
    loop {
        if fwd.depth + bwd.depth >= max_depth {
            break;
        }
        let expand_fwd = if fwd.frontier.is_empty() {
            if bwd.frontier.is_empty() {
                break;
            }
            false
        } else if bwd.frontier.is_empty() {
            true
        } else {
            fwd.frontier.len() <= bwd.frontier.len()
        };
        let (side, other) = if expand_fwd { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let frontier = std::mem::take(&mut side.frontier);
        let mut next_frontier = Vec::new();
        for &ni in &frontier {
            let state = side.nodes[ni].state.clone();
            let node_depth = side.depth;
            for pos in 0..n - 1 {
                for inverse in [false, true] {
                    let mut next = state.clone();
                    apply_letter(&mut next, pos + 1, inverse);
                    if next == state || side.index.contains_key(&next) {
                        continue;
                    }
                    let k = if inverse { -BigInt::one() } else { BigInt::one() };
                    let id = side.nodes.len();
                    side.index.insert(next.clone(), id);
                    if let Some(&oid) = other.index.get(&next) {
                        let other_depth = other_node_depth(other, oid);
                        let total = node_depth + 1 + other_depth;
                        if total <= max_depth
                            && best.as_ref().map_or(true, |(bt, _, _)| total < *bt)
                        {
                            let (f, b) = if expand_fwd { (id, oid) } else { (oid, id) };
                            best = Some((total, f, b));
                        }
                    }
                    side.nodes.push(SideNode {
                        state: next,
                        parent: ni,
                        mv: Some(MacroMove { pos, k }),
                    });
                    next_frontier.push(id);
                }
            }
        }
        side.depth += 1;
        side.frontier = next_frontier;
        if best.is_some() {
            // Any undiscovered witness is at least as long as the current
            // combined search depth, so the recorded meet is shortest.
            break;
        }
    }
    match best {
        None => Ok(None),
        Some((_, fid, bid)) => {
            let mut path = fwd.path_from_root(fid);
            path.extend(inverse_path(&bwd.path_from_root(bid)));
            let word = macro_letters(n, &path);
            debug_assert_eq!(act(v, &word)?, *u);
            Ok(Some(word))
        }
    }
}

fn other_node_depth(side: &Side, mut at: usize) -> usize {
    let mut depth = 0;
    while side.nodes[at].mv.is_some() {
        depth += 1;
        at = side.nodes[at].parent;
    }
    depth
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv(entries: &[i64]) -> BoundaryVector {
        BoundaryVector::from_i64(RingSpec::Integers, entries).unwrap()
    }

    fn word(strands: usize, toks: &str) -> BraidWord {
        BraidWord::parse(toks, strands).unwrap()
    }

    #[test]
    fn generator_action() {
        assert_eq!(act_gen(&zv(&[0, 1]), 1, 1).unwrap(), zv(&[1, 2]));
        assert_eq!(act_gen(&zv(&[1, 7, -5, -11]), 2, 1).unwrap(), zv(&[1, -5, -17, -11]));
        let back = act_gen(&act_gen(&zv(&[0, 1]), 1, 1).unwrap(), 1, -1).unwrap();
        assert_eq!(back, zv(&[0, 1]));
        assert!(matches!(
            act_gen(&zv(&[0, 1]), 2, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn word_action() {
        let v = zv(&[0, 1, 2, 3]);
        assert_eq!(act(&v, &BraidWord::identity(4)).unwrap(), v);
        assert_eq!(act(&v, &word(4, "s1")).unwrap(), zv(&[1, 2, 2, 3]));
        let w = word(4, "s1 s3^-1 s2 s2 s1^-1");
        let there = act(&v, &w).unwrap();
        assert_eq!(act(&there, &w.inverse()).unwrap(), v);
        assert!(matches!(
            act(&v, &BraidWord::identity(6)),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn word_inverse_and_parse() {
        assert_eq!(BraidWord::identity(4).inverse(), BraidWord::identity(4));
        assert_eq!(word(4, "s1").inverse(), word(4, "s1^-1"));
        assert_eq!(word(4, "s1 s2^-1").inverse(), word(4, "s2 s1^-1"));
        assert_eq!(word(4, "s1 s2^-1").to_string(), "s1 s2^-1");
        assert!(BraidWord::parse("s9", 4).is_err());
        assert!(BraidWord::parse("x1", 4).is_err());
    }

    #[test]
    fn orbit_decision() {
        let v = zv(&[0, 1, 2, 3]);
        let w = word(4, "s2 s1^-1 s3");
        assert!(orbit_equivalent(&v, &act(&v, &w).unwrap()).unwrap());
        assert!(orbit_equivalent(&zv(&[0, 1, 2, 3]), &zv(&[0, 3, 2, 1])).unwrap());
        assert!(!orbit_equivalent(&zv(&[0, 1, 2, 3]), &zv(&[0, 1, 2, 5])).unwrap());
        // Trivial vectors are fixed points.
        assert!(orbit_equivalent(&zv(&[4, 4]), &zv(&[4, 4])).unwrap());
        assert!(!orbit_equivalent(&zv(&[4, 4]), &zv(&[5, 5])).unwrap());
        assert!(matches!(
            orbit_equivalent(&zv(&[0, 1]), &zv(&[0, 1, 2, 3])),
            Err(Error::LengthMismatch(2, 4))
        ));
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form_general(&zv(&[0, 2, 1, 1])).unwrap();
        assert_eq!(act(&zv(&[0, 2, 1, 1]), &nf.witness).unwrap(), nf.normal);
        // Already canonical: spike 2 at position 2 over base 0 with d = 1.
        assert_eq!(nf.normal, zv(&[0, 2, 1, 1]));
        assert!(nf.witness.is_empty());

        let nf = normal_form_general(&zv(&[0, 1, 0, 1])).unwrap();
        assert_eq!(act(&zv(&[0, 1, 0, 1]), &nf.witness).unwrap(), nf.normal);
        match &nf.shape {
            NormalShape::GeneralForm { d, .. } => assert_eq!(*d, BigInt::one()),
            _ => panic!("expected general form"),
        }
    }

    #[test]
    fn normal_form_errors() {
        assert!(matches!(normal_form_general(&zv(&[5, 5, 5, 5])), Err(Error::TrivialVector)));
        assert!(matches!(normal_form_general(&zv(&[0, 1])), Err(Error::RequiresMAtLeast2)));
        assert!(matches!(normal_form_delta0(&zv(&[0, 3, 3, 2])), Err(Error::DeltaNonZero)));
    }

    #[test]
    fn delta0_form() {
        let v = zv(&[7, 7, 7, 7]);
        let nf = normal_form_delta0(&v).unwrap();
        assert!(nf.witness.is_empty());
        assert!(matches!(nf.shape, NormalShape::DeltaZeroForm { r: 2, s: 0, .. }));

        let v = zv(&[0, 1, 2, 1]);
        let nf = normal_form_delta0(&v).unwrap();
        assert_eq!(act(&v, &nf.witness).unwrap(), nf.normal);
        match &nf.shape {
            NormalShape::DeltaZeroForm { r, s, .. } => assert_eq!(r + s, 2),
            _ => panic!("expected block form"),
        }
    }

    #[test]
    fn connect_examples() {
        let v = zv(&[0, 1, 2, 3]);
        assert!(connect(&v, &v).unwrap().is_empty());
        let w = word(4, "s1 s2 s3^-1 s1");
        let u = act(&v, &w).unwrap();
        let found = connect(&v, &u).unwrap();
        assert_eq!(act(&v, &found).unwrap(), u);
        assert!(matches!(
            connect(&zv(&[0, 1, 2, 3]), &zv(&[0, 1, 2, 5])),
            Err(Error::NotEquivalent(_))
        ));
    }

    #[test]
    fn connect_two_strands() {
        let v = zv(&[3, 5]);
        let u = zv(&[-1, 1]); // shift by -2 steps of the difference 2
        let w = connect(&v, &u).unwrap();
        assert_eq!(act(&v, &w).unwrap(), u);
    }

    #[test]
    fn bfs_examples() {
        let v = zv(&[0, 1, 2, 3]);
        assert_eq!(bfs_witness(&v, &v, 0).unwrap(), Some(BraidWord::identity(4)));
        let found = bfs_witness(&zv(&[0, 1]), &zv(&[1, 2]), 1).unwrap().unwrap();
        assert_eq!(found, word(2, "s1"));
        assert_eq!(bfs_witness(&zv(&[0, 1, 2, 3]), &zv(&[0, 1, 2, 5]), 12).unwrap(), None);
    }

    #[test]
    fn bfs_finds_shortest() {
        let v = zv(&[0, 1, 2, 3]);
        let w = word(4, "s2 s1");
        let u = act(&v, &w).unwrap();
        let found = bfs_witness(&v, &u, 8).unwrap().unwrap();
        assert!(found.len() <= 2);
        assert_eq!(act(&v, &found).unwrap(), u);
    }
}

/// Debug helper: condensed form of an integer vector (exposed for examples).
#[doc(hidden)]
pub fn debug_condense(entries: &[i64]) -> (Vec<String>, usize) {
    let mut state: State = entries.iter().map(|&x| BigInt::from(x)).collect();
    let path = condense(&mut state);
    (state.iter().map(|x| x.to_string()).collect(), path.len())
}

/// Debug helper: boxed exhaustive search, reporting the letter count found.
#[doc(hidden)]
pub fn debug_box_bfs(from: &[i64], to: &[i64], cap: usize) -> Option<usize> {
    let f: State = from.iter().map(|&x| BigInt::from(x)).collect();
    let t: State = to.iter().map(|&x| BigInt::from(x)).collect();
    box_bfs(&f, &t, cap).map(|p| p.len())
}

/// Debug helper: runs the structured drive with tracing.
#[doc(hidden)]
pub fn debug_drive(from: &[i64], to: &[i64]) -> Option<usize> {
    let f: State = from.iter().map(|&x| BigInt::from(x)).collect();
    let t: State = to.iter().map(|&x| BigInt::from(x)).collect();
    drive_with_reversal(&f, &t, &SearchBudget::default()).map(|p| p.len())
}
