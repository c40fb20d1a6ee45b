//! Descriptors reachable from the base surfaces by surgery.

use super::descriptor::{base_invariants, validate, Descriptor};
use super::expr::{AttachKind, Base, Closed, SurfaceExpr};
use std::collections::{BTreeMap, VecDeque};

/// Surfaces whose descriptors seed the enumeration.
pub const SEED_BASES: [Base; 5] = [Base::S2a, Base::S21, Base::S22, Base::T1rot, Base::T1anti];

/// Every descriptor with `β <= beta_max` obtained from [`SEED_BASES`] by
/// double connected sums and attachments, each paired with a shortest
/// witnessing expression. Output is sorted by descriptor.
pub fn enumerate_with_witnesses(beta_max: u32) -> Vec<(Descriptor, SurfaceExpr)> {
    let mut found: BTreeMap<Descriptor, SurfaceExpr> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for b in SEED_BASES {
        let d = base_invariants(b);
        if d.beta <= beta_max && !found.contains_key(&d) {
            found.insert(d, SurfaceExpr::base(b));
            queue.push_back(d);
        }
    }
    while let Some(d) = queue.pop_front() {
        let e = found[&d].clone();
        let mut next: Vec<(Descriptor, SurfaceExpr)> = Vec::new();
        for y in [Closed::T(1), Closed::N(1)] {
            next.push((d.conn_sum2(y), e.clone().conn_sum2(y)));
        }
        for k in AttachKind::ALL {
            if let Some(n) = d.attach(k) {
                next.push((n, e.clone().attach(1, k)));
            }
        }
        for (n, ne) in next {
            if n.beta <= beta_max && !found.contains_key(&n) {
                found.insert(n, ne);
                queue.push_back(n);
            }
        }
    }
    found
        .into_iter()
        .filter(|(d, _)| validate(d).is_empty())
        .collect()
}

pub fn enumerate_descriptors(beta_max: u32) -> Vec<Descriptor> {
    enumerate_with_witnesses(beta_max)
        .into_iter()
        .map(|(d, _)| d)
        .collect()
}
