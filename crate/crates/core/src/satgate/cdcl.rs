//! A small conflict-driven clause-learning solver.
//!
//! Two watched literals, first-UIP learning, VSIDS branching with phase
//! saving, Luby restarts, and LBD-based learnt clause reduction at restarts.

use super::cnf::CnfInstance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    /// Model indexed by variable; slot 0 is unused.
    Sat(Vec<bool>),
    Unsat,
    /// The conflict budget ran out.
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
}

const UNASSIGNED: u8 = 2;
const RESTART_UNIT: u64 = 100;

#[inline]
fn var(l: u32) -> usize {
    (l >> 1) as usize
}

#[inline]
fn lit_of(dimacs: i32) -> u32 {
    let v = dimacs.unsigned_abs() - 1;
    (v << 1) | u32::from(dimacs < 0)
}

/// 1 if the literal is true, 0 if false, 2 if unassigned.
#[inline]
fn value(assign: &[u8], l: u32) -> u8 {
    let a = assign[var(l)];
    if a == UNASSIGNED {
        UNASSIGNED
    } else {
        a ^ (l & 1) as u8
    }
}

fn luby(mut x: u64) -> u64 {
    let (mut size, mut seq) = (1u64, 0u32);
    while size < x + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != x {
        size = (size - 1) >> 1;
        seq -= 1;
        x %= size;
    }
    1 << seq
}

struct Clause {
    lits: Vec<u32>,
    learnt: bool,
    lbd: u32,
}

struct Heap {
    items: Vec<usize>,
    pos: Vec<usize>,
}

impl Heap {
    fn new(n: usize) -> Self {
        Heap {
            items: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    fn contains(&self, v: usize) -> bool {
        self.pos[v] != usize::MAX
    }

    fn up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.items[i];
        while i > 0 {
            let p = (i - 1) / 2;
            if act[self.items[p]] >= act[v] {
                break;
            }
            self.items[i] = self.items[p];
            self.pos[self.items[i]] = i;
            i = p;
        }
        self.items[i] = v;
        self.pos[v] = i;
    }

    fn down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.items[i];
        let n = self.items.len();
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let c = if r < n && act[self.items[r]] > act[self.items[l]] {
                r
            } else {
                l
            };
            if act[self.items[c]] <= act[v] {
                break;
            }
            self.items[i] = self.items[c];
            self.pos[self.items[i]] = i;
            i = c;
        }
        self.items[i] = v;
        self.pos[v] = i;
    }

    fn insert(&mut self, v: usize, act: &[f64]) {
        if self.contains(v) {
            return;
        }
        self.items.push(v);
        self.up(self.items.len() - 1, act);
    }

    fn pop(&mut self, act: &[f64]) -> Option<usize> {
        let top = *self.items.first()?;
        let last = self.items.pop().expect("non-empty");
        self.pos[top] = usize::MAX;
        if !self.items.is_empty() {
            self.items[0] = last;
            self.pos[last] = 0;
            self.down(0, act);
        }
        Some(top)
    }
}

struct Solver {
    clauses: Vec<Clause>,
    watches: Vec<Vec<usize>>,
    assign: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<Option<usize>>,
    phase: Vec<bool>,
    trail: Vec<u32>,
    trail_lim: Vec<usize>,
    qhead: usize,
    activity: Vec<f64>,
    var_inc: f64,
    heap: Heap,
    seen: Vec<bool>,
    level_stamp: Vec<u64>,
    stamp: u64,
    max_learnts: f64,
    stats: SolverStats,
}

impl Solver {
    fn new(n: usize) -> Self {
        Solver {
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * n],
            assign: vec![UNASSIGNED; n],
            level: vec![0; n],
            reason: vec![None; n],
            phase: vec![false; n],
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; n],
            var_inc: 1.0,
            heap: Heap::new(n),
            seen: vec![false; n],
            level_stamp: vec![0; n + 1],
            stamp: 0,
            max_learnts: 0.0,
            stats: SolverStats::default(),
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: u32, reason: Option<usize>) {
        let v = var(l);
        self.assign[v] = 1 ^ (l & 1) as u8;
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Adds an original clause at level 0. Returns false on a root conflict.
    fn add_clause(&mut self, dimacs: &[i32]) -> bool {
        let mut lits: Vec<u32> = dimacs.iter().map(|&l| lit_of(l)).collect();
        lits.sort_unstable();
        lits.dedup();
        if lits.windows(2).any(|w| w[0] ^ 1 == w[1]) {
            return true;
        }
        lits.retain(|&l| value(&self.assign, l) != 0);
        if lits.iter().any(|&l| value(&self.assign, l) == 1) {
            return true;
        }
        match lits.len() {
            0 => false,
            1 => {
                self.enqueue(lits[0], None);
                self.propagate().is_none()
            }
            _ => {
                self.attach(Clause {
                    lits,
                    learnt: false,
                    lbd: 0,
                });
                true
            }
        }
    }

    fn attach(&mut self, c: Clause) -> usize {
        let ci = self.clauses.len();
        self.watches[c.lits[0] as usize].push(ci);
        self.watches[c.lits[1] as usize].push(ci);
        self.clauses.push(c);
        ci
    }

    fn propagate(&mut self) -> Option<usize> {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = p ^ 1;
            let mut ws = std::mem::take(&mut self.watches[false_lit as usize]);
            let (mut i, mut j) = (0, 0);
            let mut conflict = None;
            while i < ws.len() {
                let ci = ws[i];
                i += 1;
                let lits = &mut self.clauses[ci].lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                if value(&self.assign, lits[0]) == 1 {
                    ws[j] = ci;
                    j += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..lits.len() {
                    if value(&self.assign, lits[k]) != 0 {
                        lits.swap(1, k);
                        self.watches[lits[1] as usize].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = ci;
                j += 1;
                let first = lits[0];
                if value(&self.assign, first) == 0 {
                    conflict = Some(ci);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        i += 1;
                        j += 1;
                    }
                } else {
                    self.enqueue(first, Some(ci));
                }
            }
            ws.truncate(j);
            self.watches[false_lit as usize] = ws;
            if conflict.is_some() {
                return conflict;
            }
        }
        None
    }

    fn bump(&mut self, v: usize) {
        self.activity[v] += self.var_inc;
        if self.activity[v] > 1e100 {
            for a in &mut self.activity {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        if self.heap.contains(v) {
            self.heap.up(self.heap.pos[v], &self.activity);
        }
    }

    /// First-UIP analysis. Returns the learnt clause (asserting literal
    /// first, highest other level second) and the backjump level.
    fn analyze(&mut self, mut confl: usize) -> (Vec<u32>, u32) {
        let current = self.decision_level();
        let mut learnt = vec![0u32];
        let mut pending = 0usize;
        let mut p: Option<u32> = None;
        let mut idx = self.trail.len();
        loop {
            let start = usize::from(p.is_some());
            let lits = self.clauses[confl].lits.clone();
            for &q in &lits[start..] {
                let v = var(q);
                if !self.seen[v] && self.level[v] > 0 {
                    self.seen[v] = true;
                    self.bump(v);
                    if self.level[v] >= current {
                        pending += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                idx -= 1;
                if self.seen[var(self.trail[idx])] {
                    break;
                }
            }
            let lit = self.trail[idx];
            self.seen[var(lit)] = false;
            pending -= 1;
            p = Some(lit);
            if pending == 0 {
                break;
            }
            confl = self.reason[var(lit)].expect("implied literal has a reason");
        }
        learnt[0] = p.expect("conflict at positive level") ^ 1;
        for &q in &learnt[1..] {
            self.seen[var(q)] = false;
        }
        let mut bt = 0;
        if learnt.len() > 1 {
            let mut best = 1;
            for i in 2..learnt.len() {
                if self.level[var(learnt[i])] > self.level[var(learnt[best])] {
                    best = i;
                }
            }
            learnt.swap(1, best);
            bt = self.level[var(learnt[1])];
        }
        (learnt, bt)
    }

    fn lbd(&mut self, lits: &[u32]) -> u32 {
        self.stamp += 1;
        let mut count = 0;
        for &l in lits {
            let lv = self.level[var(l)] as usize;
            if self.level_stamp[lv] != self.stamp {
                self.level_stamp[lv] = self.stamp;
                count += 1;
            }
        }
        count
    }

    fn cancel_until(&mut self, lvl: u32) {
        if self.decision_level() <= lvl {
            return;
        }
        let stop = self.trail_lim[lvl as usize];
        for i in (stop..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = var(l);
            self.phase[v] = l & 1 == 0;
            self.assign[v] = UNASSIGNED;
            self.reason[v] = None;
            self.heap.insert(v, &self.activity);
        }
        self.trail.truncate(stop);
        self.trail_lim.truncate(lvl as usize);
        self.qhead = stop;
    }

    /// Drops half of the weaker learnt clauses. Must run at level 0.
    fn reduce(&mut self) {
        let mut learnts: Vec<usize> = (0..self.clauses.len())
            .filter(|&i| self.clauses[i].learnt && self.clauses[i].lbd > 2)
            .collect();
        learnts.sort_by_key(|&i| (self.clauses[i].lbd, self.clauses[i].lits.len()));
        let mut drop = vec![false; self.clauses.len()];
        for &i in &learnts[learnts.len() / 2..] {
            drop[i] = true;
        }
        let old = std::mem::take(&mut self.clauses);
        for w in &mut self.watches {
            w.clear();
        }
        for r in &mut self.reason {
            *r = None;
        }
        for (i, c) in old.into_iter().enumerate() {
            if !drop[i] {
                self.attach(c);
            }
        }
    }

    fn pick_branch(&mut self) -> Option<u32> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.assign[v] == UNASSIGNED {
                return Some(((v as u32) << 1) | u32::from(!self.phase[v]));
            }
        }
        None
    }

    fn search(&mut self, budget: Option<u64>) -> SolveResult {
        let mut restart = 0u64;
        let mut until_restart = luby(restart) * RESTART_UNIT;
        self.max_learnts = (self.clauses.len() as f64 / 3.0).max(2000.0);
        loop {
            if let Some(confl) = self.propagate() {
                self.stats.conflicts += 1;
                if self.decision_level() == 0 {
                    return SolveResult::Unsat;
                }
                let (learnt, bt) = self.analyze(confl);
                self.cancel_until(bt);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], None);
                } else {
                    let lbd = self.lbd(&learnt);
                    let first = learnt[0];
                    let ci = self.attach(Clause {
                        lits: learnt,
                        learnt: true,
                        lbd,
                    });
                    self.enqueue(first, Some(ci));
                }
                self.var_inc /= 0.95;
                until_restart = until_restart.saturating_sub(1);
                if budget.is_some_and(|b| self.stats.conflicts >= b) {
                    return SolveResult::Unknown;
                }
                continue;
            }
            if until_restart == 0 {
                restart += 1;
                until_restart = luby(restart) * RESTART_UNIT;
                self.cancel_until(0);
                let learnt = self.clauses.iter().filter(|c| c.learnt).count();
                if learnt as f64 > self.max_learnts {
                    self.reduce();
                    self.max_learnts *= 1.1;
                }
                continue;
            }
            match self.pick_branch() {
                None => {
                    let mut model = vec![false; self.assign.len() + 1];
                    for (v, &a) in self.assign.iter().enumerate() {
                        model[v + 1] = a == 1;
                    }
                    return SolveResult::Sat(model);
                }
                Some(l) => {
                    self.stats.decisions += 1;
                    self.trail_lim.push(self.trail.len());
                    self.enqueue(l, None);
                }
            }
        }
    }
}

/// Solves `cnf`, giving up with [`SolveResult::Unknown`] after
/// `conflict_budget` conflicts.
pub fn solve(cnf: &CnfInstance, conflict_budget: Option<u64>) -> SolveResult {
    solve_with_stats(cnf, conflict_budget).0
}

pub fn solve_with_stats(
    cnf: &CnfInstance,
    conflict_budget: Option<u64>,
) -> (SolveResult, SolverStats) {
    let mut s = Solver::new(cnf.num_vars);
    for c in &cnf.clauses {
        if !s.add_clause(c) {
            return (SolveResult::Unsat, s.stats);
        }
    }
    let r = s.search(conflict_budget);
    (r, s.stats)
}
