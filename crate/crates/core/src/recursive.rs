//! Constant-amortized-time generation of the pivot Gray code listing.
//!
//! The listing of `F_n` splits into four stages:
//!
//! 1. the listing of `F_{n-1}` with `v_n v_{n-1}` added,
//! 2. the reversed listing of `F_{n-1}` with `v_n v_inf` added,
//! 3. the listing of `F_{n-2}` with `v_n v_{n-1}` and `v_n v_inf` added, where
//!    `v_{n-2} v_{n-1}` stands in for `v_{n-2} v_inf`,
//! 4. the trees of the `F_{n-2}` listing that contain `v_{n-2} v_inf`, reversed,
//!    again with `v_n v_{n-1}` and `v_n v_inf` added.
//!
//! [`RecursiveEngine::gen`] and [`RecursiveEngine::rev_gen`] walk this
//! decomposition recursively, mutating a single shared tree and pushing every
//! move to a [`ListingSink`]. [`ListStream`] produces the same events from an
//! explicit frame stack so callers can pull them lazily and stop early.
//!
//! Each activation with `k > 3` emits at least two trees and makes at most four
//! child calls, so activations stay below `2 t_n` and the work per tree is
//! constant on average. The stack never holds more than `n - 1` frames.

use crate::error::{Error, Result};
use crate::fan::{FanDims, PivotMove, SpanningTree};
use crate::rank;

/// Receives the listing one tree at a time.
///
/// The first event carries no move; every later event carries the move that
/// turned the previous tree into `tree`. The tree is borrowed from the engine
/// and must be cloned to be kept.
pub trait ListingSink {
    fn emit(&mut self, mv: Option<PivotMove>, tree: &SpanningTree);
}

impl<F: FnMut(Option<PivotMove>, &SpanningTree)> ListingSink for F {
    fn emit(&mut self, mv: Option<PivotMove>, tree: &SpanningTree) {
        self(mv, tree)
    }
}

/// Arguments of one recursive activation.
///
/// `k` is the number of vertices in play, `s1` asks for the first stage, and
/// `var_edge` substitutes `v_k v_{k+1}` for `v_k v_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenFrame {
    pub k: usize,
    pub s1: bool,
    pub var_edge: bool,
}

impl GenFrame {
    /// The top-level frame `(n, true, false)`.
    pub fn root(dims: FanDims) -> Self {
        GenFrame {
            k: dims.n(),
            s1: true,
            var_edge: false,
        }
    }

    pub fn new(dims: FanDims, k: usize, s1: bool, var_edge: bool) -> Result<Self> {
        if !(2..=dims.n()).contains(&k) {
            return Err(Error::InvalidFrame(format!("k = {k} outside 2..={}", dims.n())));
        }
        if var_edge && k + 2 > dims.n() {
            return Err(Error::InvalidFrame(format!(
                "var_edge needs v_{} in F_{}",
                k + 1,
                dims.n()
            )));
        }
        Ok(GenFrame { k, s1, var_edge })
    }

    const fn of(k: usize, s1: bool, var_edge: bool) -> Self {
        GenFrame { k, s1, var_edge }
    }
}

/// Instrumentation counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Trees delivered to the sink, including the entry tree.
    pub trees: u64,
    pub moves: u64,
    /// Calls of `gen`/`rev_gen`, root included.
    pub activations: u64,
    pub max_depth: usize,
}

/// Owner of the shared tree threaded through the recursion.
#[derive(Debug, Clone)]
pub struct RecursiveEngine {
    tree: SpanningTree,
    stats: EngineStats,
    depth: usize,
}

impl RecursiveEngine {
    /// An engine positioned at `tree`, which must be the entry tree of whatever
    /// frame is run first.
    pub fn new(tree: SpanningTree) -> Self {
        RecursiveEngine {
            tree,
            stats: EngineStats::default(),
            depth: 0,
        }
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn into_tree(self) -> SpanningTree {
        self.tree
    }

    /// Sends the current tree as an initial, move-less event.
    pub fn emit_current<S: ListingSink>(&mut self, sink: &mut S) {
        self.stats.trees += 1;
        sink.emit(None, &self.tree);
    }

    #[inline]
    fn step<S: ListingSink>(&mut self, m: PivotMove, sink: &mut S) {
        self.tree.apply_unchecked(m);
        self.stats.moves += 1;
        self.stats.trees += 1;
        sink.emit(Some(m), &self.tree);
    }

    #[inline]
    fn enter(&mut self) {
        self.stats.activations += 1;
        self.depth += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.depth);
    }

    /// Emits the frame's block of the listing, leaving the tree at its last tree.
    pub fn gen<S: ListingSink>(&mut self, f: GenFrame, sink: &mut S) {
        self.enter();
        let GenFrame { k, s1, var_edge } = f;
        match k {
            2 => {
                if var_edge {
                    self.step(PivotMove::from_hub(2, 3), sink);
                }
            }
            3 => {
                if s1 {
                    if var_edge {
                        self.step(PivotMove::finite(3, 2, 4), sink);
                    } else {
                        self.step(PivotMove::to_hub(3, 2), sink);
                    }
                }
                self.step(PivotMove::from_hub(2, 3), sink);
            }
            _ => {
                if s1 {
                    self.gen(GenFrame::of(k - 1, true, false), sink);
                    if var_edge {
                        self.step(PivotMove::finite(k, k - 1, k + 1), sink);
                    } else {
                        self.step(PivotMove::to_hub(k, k - 1), sink);
                    }
                }
                self.rev_gen(GenFrame::of(k - 1, true, false), sink);
                self.step(PivotMove::finite(k - 1, k - 2, k), sink);
                self.gen(GenFrame::of(k - 2, true, true), sink);
                if k > 4 {
                    self.step(PivotMove::to_hub(k - 2, k - 1), sink);
                }
                self.rev_gen(GenFrame::of(k - 2, false, false), sink);
            }
        }
        self.depth -= 1;
    }

    /// Exactly undoes [`RecursiveEngine::gen`] for the same frame, emitting its
    /// block in reverse. The tree must start at the block's last tree.
    pub fn rev_gen<S: ListingSink>(&mut self, f: GenFrame, sink: &mut S) {
        self.enter();
        let GenFrame { k, s1, var_edge } = f;
        match k {
            2 => {
                if var_edge {
                    self.step(PivotMove::to_hub(2, 3), sink);
                }
            }
            3 => {
                self.step(PivotMove::to_hub(2, 3), sink);
                if s1 {
                    if var_edge {
                        self.step(PivotMove::finite(3, 4, 2), sink);
                    } else {
                        self.step(PivotMove::from_hub(3, 2), sink);
                    }
                }
            }
            _ => {
                self.gen(GenFrame::of(k - 2, false, false), sink);
                if k > 4 {
                    self.step(PivotMove::from_hub(k - 2, k - 1), sink);
                }
                self.rev_gen(GenFrame::of(k - 2, true, true), sink);
                self.step(PivotMove::finite(k - 1, k, k - 2), sink);
                self.gen(GenFrame::of(k - 1, true, false), sink);
                if s1 {
                    if var_edge {
                        self.step(PivotMove::finite(k, k + 1, k - 1), sink);
                    } else {
                        self.step(PivotMove::from_hub(k, k - 1), sink);
                    }
                    self.rev_gen(GenFrame::of(k - 1, true, false), sink);
                }
            }
        }
        self.depth -= 1;
    }
}

/// Streams the forward listing of `F_n` into `sink`, starting at the path tree.
pub fn list<S: ListingSink>(dims: FanDims, sink: &mut S) -> EngineStats {
    let mut engine = RecursiveEngine::new(SpanningTree::path(dims));
    engine.emit_current(sink);
    engine.gen(GenFrame::root(dims), sink);
    engine.stats()
}

/// Streams the reversed listing, starting at the last tree of the forward one.
pub fn rev_list<S: ListingSink>(dims: FanDims, sink: &mut S) -> EngineStats {
    let mut engine = RecursiveEngine::new(rank::last_tree(dims));
    engine.emit_current(sink);
    engine.rev_gen(GenFrame::root(dims), sink);
    engine.stats()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Move(PivotMove),
    Call(GenFrame, bool),
    Skip,
}

/// Number of slots in the straight-line program of a frame.
fn program_len(k: usize) -> usize {
    match k {
        2 => 1,
        3 => 2,
        _ => 7,
    }
}

/// Slot `pc` of the forward program; mirrors the body of [`RecursiveEngine::gen`].
fn forward_op(f: GenFrame, pc: usize) -> Op {
    let GenFrame { k, s1, var_edge } = f;
    match (k, pc) {
        (2, _) if var_edge => Op::Move(PivotMove::from_hub(2, 3)),
        (2, _) => Op::Skip,
        (3, 0) if !s1 => Op::Skip,
        (3, 0) if var_edge => Op::Move(PivotMove::finite(3, 2, 4)),
        (3, 0) => Op::Move(PivotMove::to_hub(3, 2)),
        (3, _) => Op::Move(PivotMove::from_hub(2, 3)),
        (_, 0) if s1 => Op::Call(GenFrame::of(k - 1, true, false), false),
        (_, 1) if s1 && var_edge => Op::Move(PivotMove::finite(k, k - 1, k + 1)),
        (_, 1) if s1 => Op::Move(PivotMove::to_hub(k, k - 1)),
        (_, 0 | 1) => Op::Skip,
        (_, 2) => Op::Call(GenFrame::of(k - 1, true, false), true),
        (_, 3) => Op::Move(PivotMove::finite(k - 1, k - 2, k)),
        (_, 4) => Op::Call(GenFrame::of(k - 2, true, true), false),
        (_, 5) if k > 4 => Op::Move(PivotMove::to_hub(k - 2, k - 1)),
        (_, 5) => Op::Skip,
        _ => Op::Call(GenFrame::of(k - 2, false, false), true),
    }
}

/// Slot `pc` of a frame, read backwards and inverted when `reverse` is set.
fn op_at(f: GenFrame, reverse: bool, pc: usize) -> Op {
    if !reverse {
        return forward_op(f, pc);
    }
    match forward_op(f, program_len(f.k) - 1 - pc) {
        Op::Move(m) => Op::Move(m.inverse()),
        Op::Call(g, rev) => Op::Call(g, !rev),
        Op::Skip => Op::Skip,
    }
}

#[derive(Clone, Copy, Debug)]
struct StackFrame {
    frame: GenFrame,
    reverse: bool,
    pc: usize,
}

/// Pull-style listing driven by an explicit frame stack.
///
/// Each call to [`Iterator::next`] yields the move of the next event (`None`
/// for the initial tree) and leaves [`ListStream::tree`] at that event's tree.
/// Use [`ListStream::snapshots`] to receive owned trees instead.
#[derive(Debug, Clone)]
pub struct ListStream {
    tree: SpanningTree,
    stack: Vec<StackFrame>,
    started: bool,
    stats: EngineStats,
}

impl ListStream {
    pub fn new(dims: FanDims, direction: Direction) -> Self {
        let (tree, reverse) = match direction {
            Direction::Forward => (SpanningTree::path(dims), false),
            Direction::Reverse => (rank::last_tree(dims), true),
        };
        let mut stack = Vec::with_capacity(dims.n());
        stack.push(StackFrame {
            frame: GenFrame::root(dims),
            reverse,
            pc: 0,
        });
        ListStream {
            tree,
            stack,
            started: false,
            stats: EngineStats {
                activations: 1,
                max_depth: 1,
                ..EngineStats::default()
            },
        }
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn snapshots(self) -> Snapshots {
        Snapshots(self)
    }
}

impl Iterator for ListStream {
    type Item = Option<PivotMove>;

    fn next(&mut self) -> Option<Option<PivotMove>> {
        if !self.started {
            self.started = true;
            self.stats.trees += 1;
            return Some(None);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.pc == program_len(top.frame.k) {
                self.stack.pop();
                continue;
            }
            let op = op_at(top.frame, top.reverse, top.pc);
            top.pc += 1;
            match op {
                Op::Move(m) => {
                    self.tree.apply_unchecked(m);
                    self.stats.moves += 1;
                    self.stats.trees += 1;
                    return Some(Some(m));
                }
                Op::Call(frame, reverse) => {
                    self.stack.push(StackFrame {
                        frame,
                        reverse,
                        pc: 0,
                    });
                    self.stats.activations += 1;
                    self.stats.max_depth = self.stats.max_depth.max(self.stack.len());
                }
                Op::Skip => {}
            }
        }
    }
}

/// [`ListStream`] adapter yielding owned `(move, tree)` pairs.
#[derive(Debug, Clone)]
pub struct Snapshots(ListStream);

impl Iterator for Snapshots {
    type Item = (Option<PivotMove>, SpanningTree);

    fn next(&mut self) -> Option<Self::Item> {
        let m = self.0.next()?;
        Some((m, self.0.tree.clone()))
    }
}

/// Lazily streams the listing of `F_n` in the given direction.
pub fn list_stream(dims: FanDims, direction: Direction) -> ListStream {
    ListStream::new(dims, direction)
}
