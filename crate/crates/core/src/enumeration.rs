//! Exhaustive sweep over labeled graphs of a fixed order.
//!
//! Every graph on `n` vertices is an edge mask over the `C(n,2)` vertex
//! pairs (graph6 pair order). The sweep walks all masks, keeps connected
//! graphs, and ranks them per class (cut-vertex count, κ or λ) by exact
//! Harary index, retaining the best and second-best values with every
//! labeled graph attaining them.
//!
//! Workers take disjoint mask ranges and fill private [`TopTable`]s which
//! are merged at the end; tier contents are sorted so the result does not
//! depend on the worker count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::connectivity::{cut_vertex_count, edge_connectivity, vertex_connectivity};
use crate::error::{invalid, GraphError, Result};
use crate::graph::{are_isomorphic, emit_graph6, Graph};
use crate::metrics::{harary_scale, harary_scaled, unscale};
use crate::rational::ExactRational;

/// Hard ceiling on the sweep order.
pub const MAX_ENUMERATION_ORDER: usize = 8;
/// Orders above this need [`SweepOptions::allow_large`].
pub const DEFAULT_ENUMERATION_ORDER: usize = 7;

const CHUNK_BITS: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    CutVertexCount,
    VertexConnectivity,
    EdgeConnectivity,
}

impl ClassKind {
    pub fn classify(self, g: &Graph) -> usize {
        match self {
            ClassKind::CutVertexCount => cut_vertex_count(g),
            ClassKind::VertexConnectivity => vertex_connectivity(g),
            ClassKind::EdgeConnectivity => edge_connectivity(g),
        }
    }

    /// Cheap bound on the class of a connected graph: κ ≤ λ ≤ δ.
    fn upper_bound(self, g: &Graph) -> usize {
        match self {
            ClassKind::CutVertexCount => g.order().saturating_sub(2),
            ClassKind::VertexConnectivity | ClassKind::EdgeConnectivity => g.min_degree(),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            ClassKind::CutVertexCount => "cut",
            ClassKind::VertexConnectivity => "kappa",
            ClassKind::EdgeConnectivity => "lambda",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassKey {
    pub kind: ClassKind,
    pub value: usize,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub workers: usize,
    /// Permits `n = 8` (2^28 masks).
    pub allow_large: bool,
    /// Largest order accepted; may only lower [`MAX_ENUMERATION_ORDER`].
    pub max_order: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            workers: 1,
            allow_large: false,
            max_order: MAX_ENUMERATION_ORDER,
        }
    }
}

impl SweepOptions {
    pub fn with_workers(workers: usize) -> Self {
        SweepOptions {
            workers,
            ..Default::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.workers == 0 {
            return Err(invalid("at least one worker is required"));
        }
        let cap = self.max_order.min(MAX_ENUMERATION_ORDER);
        if n > cap {
            return Err(GraphError::TooLarge {
                requested: n,
                max: cap,
            });
        }
        if n < 2 {
            return Err(invalid(format!("enumeration needs n >= 2, got {n}")));
        }
        if n > DEFAULT_ENUMERATION_ORDER && !self.allow_large {
            return Err(invalid(format!(
                "order {n} needs allow_large (2^{} masks)",
                n * (n - 1) / 2
            )));
        }
        Ok(())
    }
}

fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

/// Union-find over the set bits of `mask`.
struct MaskConnectivity {
    n: usize,
    pairs: Vec<(u8, u8)>,
}

impl MaskConnectivity {
    fn new(n: usize) -> Self {
        let mut pairs = Vec::new();
        for j in 1..n {
            for i in 0..j {
                pairs.push((i as u8, j as u8));
            }
        }
        MaskConnectivity { n, pairs }
    }

    fn is_connected(&self, mask: u64) -> bool {
        let mut parent = [0u8; MAX_ENUMERATION_ORDER];
        for (i, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut components = self.n;
        let mut m = mask;
        while m != 0 {
            let (a, b) = self.pairs[m.trailing_zeros() as usize];
            m &= m - 1;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra as usize] = rb;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
        components == 1
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SweepStats {
    /// Edge masks examined, `2^C(n,2)` for a full sweep.
    pub masks: u64,
    pub connected: u64,
}

/// Calls `visit` on every connected labeled graph on `n` vertices together
/// with its edge mask. Single-threaded.
pub fn enumerate_connected(
    n: usize,
    opts: &SweepOptions,
    mut visit: impl FnMut(u64, &Graph),
) -> Result<SweepStats> {
    opts.check(n)?;
    let total = 1u64 << pair_count(n);
    let uf = MaskConnectivity::new(n);
    let mut stats = SweepStats::default();
    for mask in 0..total {
        stats.masks += 1;
        if uf.is_connected(mask) {
            stats.connected += 1;
            visit(mask, &Graph::from_edge_mask(n, mask)?);
        }
    }
    Ok(stats)
}

/// Labeled graphs sharing one exact index value, as edge masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tier {
    /// `scale · H`.
    pub scaled: u64,
    pub masks: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub best: Tier,
    pub second: Option<Tier>,
}

impl Slot {
    fn offer(&mut self, scaled: u64, masks: &[u64]) {
        use std::cmp::Ordering::*;
        match scaled.cmp(&self.best.scaled) {
            Greater => {
                let old = std::mem::replace(
                    &mut self.best,
                    Tier {
                        scaled,
                        masks: masks.to_vec(),
                    },
                );
                self.second = Some(old);
            }
            Equal => self.best.masks.extend_from_slice(masks),
            Less => match &mut self.second {
                Some(second) if scaled == second.scaled => second.masks.extend_from_slice(masks),
                Some(second) if scaled < second.scaled => {}
                _ => {
                    self.second = Some(Tier {
                        scaled,
                        masks: masks.to_vec(),
                    })
                }
            },
        }
    }

    /// Values strictly below this can never enter the slot.
    fn floor(&self) -> u64 {
        self.second.as_ref().map_or(0, |t| t.scaled)
    }
}

/// Per-class best and second-best Harary values with their attaining graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopTable {
    pub n: usize,
    pub kind: ClassKind,
    /// `lcm(1..n-1)`; every stored value is `scale · H`.
    pub scale: u64,
    pub slots: BTreeMap<usize, Slot>,
    pub stats: SweepStats,
}

impl TopTable {
    pub fn new(n: usize, kind: ClassKind) -> Self {
        TopTable {
            n,
            kind,
            scale: harary_scale(n),
            slots: BTreeMap::new(),
            stats: SweepStats::default(),
        }
    }

    pub fn offer(&mut self, class: usize, scaled: u64, mask: u64) {
        self.offer_many(class, scaled, &[mask]);
    }

    fn offer_many(&mut self, class: usize, scaled: u64, masks: &[u64]) {
        match self.slots.get_mut(&class) {
            Some(slot) => slot.offer(scaled, masks),
            None => {
                self.slots.insert(
                    class,
                    Slot {
                        best: Tier {
                            scaled,
                            masks: masks.to_vec(),
                        },
                        second: None,
                    },
                );
            }
        }
    }

    /// Associative, commutative combination of two partial tables.
    pub fn merge(mut self, other: TopTable) -> TopTable {
        assert_eq!(
            (self.n, self.kind),
            (other.n, other.kind),
            "merging tables of different sweeps"
        );
        for (class, slot) in other.slots {
            self.offer_many(class, slot.best.scaled, &slot.best.masks);
            if let Some(second) = slot.second {
                self.offer_many(class, second.scaled, &second.masks);
            }
        }
        self.stats.masks += other.stats.masks;
        self.stats.connected += other.stats.connected;
        self
    }

    fn normalize(&mut self) {
        for slot in self.slots.values_mut() {
            slot.best.masks.sort_unstable();
            slot.best.masks.dedup();
            if let Some(second) = &mut slot.second {
                second.masks.sort_unstable();
                second.masks.dedup();
            }
        }
    }

    /// Lowest value that could still matter for a graph whose class is at
    /// most `bound`.
    fn prune_floor(&self, bound: usize) -> u64 {
        let lowest = match self.kind {
            ClassKind::CutVertexCount => 0,
            _ => 1,
        };
        (lowest..=bound)
            .map(|c| self.slots.get(&c).map_or(0, Slot::floor))
            .min()
            .unwrap_or(0)
    }

    pub fn value(&self, tier: &Tier) -> ExactRational {
        unscale(tier.scaled, self.scale)
    }

    pub fn graph(&self, mask: u64) -> Graph {
        Graph::from_edge_mask(self.n, mask).expect("stored masks are valid")
    }

    /// Splits a tier into isomorphism classes; each class is represented by
    /// its smallest mask.
    pub fn isomorphism_classes(&self, tier: &Tier) -> Result<Vec<IsoClass>> {
        let mut classes: Vec<IsoClass> = Vec::new();
        for &mask in &tier.masks {
            let g = self.graph(mask);
            let mut found = false;
            for c in classes.iter_mut() {
                if are_isomorphic(&g, &c.representative)? {
                    c.labeled_count += 1;
                    found = true;
                    break;
                }
            }
            if !found {
                classes.push(IsoClass {
                    representative: g,
                    labeled_count: 1,
                });
            }
        }
        Ok(classes)
    }

    pub fn report(&self) -> Result<TopTableReport> {
        let tier_report = |tier: &Tier| -> Result<TierReport> {
            let value = self.value(tier);
            Ok(TierReport {
                harary_decimal: value.to_f64(),
                harary: value,
                labeled_count: tier.masks.len(),
                isomorphism_classes: self
                    .isomorphism_classes(tier)?
                    .into_iter()
                    .map(|c| ClassWitness {
                        graph6: emit_graph6(&c.representative),
                        labeled_count: c.labeled_count,
                    })
                    .collect(),
            })
        };
        let classes = self
            .slots
            .iter()
            .map(|(&value, slot)| {
                Ok(ClassReport {
                    value,
                    best: tier_report(&slot.best)?,
                    second: slot.second.as_ref().map(tier_report).transpose()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TopTableReport {
            n: self.n,
            kind: self.kind,
            labeled_graphs: self.stats.masks,
            connected_graphs: self.stats.connected,
            classes,
        })
    }
}

#[derive(Debug, Clone)]
pub struct IsoClass {
    pub representative: Graph,
    pub labeled_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassWitness {
    pub graph6: String,
    pub labeled_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TierReport {
    pub harary: ExactRational,
    pub harary_decimal: f64,
    pub labeled_count: usize,
    pub isomorphism_classes: Vec<ClassWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub value: usize,
    pub best: TierReport,
    pub second: Option<TierReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopTableReport {
    pub n: usize,
    pub kind: ClassKind,
    pub labeled_graphs: u64,
    pub connected_graphs: u64,
    pub classes: Vec<ClassReport>,
}

fn sweep_range(
    n: usize,
    kind: ClassKind,
    start: u64,
    end: u64,
    uf: &MaskConnectivity,
    table: &mut TopTable,
) {
    let scale = table.scale;
    for mask in start..end {
        table.stats.masks += 1;
        if !uf.is_connected(mask) {
            continue;
        }
        table.stats.connected += 1;
        let g = Graph::from_edge_mask(n, mask).expect("mask within pair range");
        let value = harary_scaled(&g, scale);
        if value < table.prune_floor(kind.upper_bound(&g)) {
            continue;
        }
        table.offer(kind.classify(&g), value, mask);
    }
}

/// Sweeps every labeled graph on `n` vertices and ranks the connected ones
/// per class of `kind`.
pub fn classify_and_rank(n: usize, kind: ClassKind, opts: &SweepOptions) -> Result<TopTable> {
    opts.check(n)?;
    let total = 1u64 << pair_count(n);
    let chunk = 1u64 << CHUNK_BITS.min(pair_count(n));
    let chunks = total / chunk;
    let uf = MaskConnectivity::new(n);

    let table = if opts.workers == 1 {
        let mut table = TopTable::new(n, kind);
        sweep_range(n, kind, 0, total, &uf, &mut table);
        table
    } else {
        let next = AtomicU64::new(0);
        let partials: Vec<TopTable> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..opts.workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut table = TopTable::new(n, kind);
                        loop {
                            let c = next.fetch_add(1, Ordering::Relaxed);
                            if c >= chunks {
                                break;
                            }
                            sweep_range(n, kind, c * chunk, (c + 1) * chunk, &uf, &mut table);
                        }
                        table
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        });
        partials
            .into_iter()
            .fold(TopTable::new(n, kind), TopTable::merge)
    };
    let mut table = table;
    table.normalize();
    Ok(table)
}
