use super::composition::{ComponentSpec, Composition, Kind};

/// Powers of `P_size` that give distinct graphs: beyond `size - 1` the path is complete.
pub fn path_specs(size: usize) -> impl Iterator<Item = ComponentSpec> {
    (1..=size.saturating_sub(1).max(1)).map(move |k| ComponentSpec::path(size, k))
}

/// Powers of `C_size` that give distinct graphs: from `size / 2` on the cycle is complete.
pub fn cycle_specs(size: usize) -> impl Iterator<Item = ComponentSpec> {
    (1..=(size / 2).max(1)).map(move |k| ComponentSpec::cycle(size, k))
}

/// Which compositions [`compositions`] should produce.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub distinguished: Kind,
    pub min_cycles: usize,
    pub max_cycles: usize,
    pub max_n: usize,
}

/// Every composition of one distinguished component of the given kind plus
/// `min_cycles..=max_cycles` cycle powers, up to isomorphism of the
/// non-distinguished part, with at most `max_n` vertices. Powers are limited
/// to those producing distinct graphs.
pub fn compositions(shape: Shape) -> Vec<Composition> {
    let mut pool: Vec<ComponentSpec> = (3..=shape.max_n).flat_map(cycle_specs).collect();
    pool.sort();

    let mut out = Vec::new();
    let first_size = match shape.distinguished {
        Kind::Path => 1,
        Kind::Cycle => 3,
    };
    for size in first_size..=shape.max_n {
        let heads: Vec<ComponentSpec> = match shape.distinguished {
            Kind::Path => path_specs(size).collect(),
            Kind::Cycle => cycle_specs(size).collect(),
        };
        for head in heads {
            let mut tail = Vec::new();
            extend_multisets(&pool, 0, shape.max_n - size, &shape, &mut tail, &mut |others| {
                let mut comps = vec![head];
                comps.extend_from_slice(others);
                out.push(Composition::new(comps, 0).expect("enumerated specs are valid"));
            });
        }
    }
    out
}

fn extend_multisets(
    pool: &[ComponentSpec],
    from: usize,
    room: usize,
    shape: &Shape,
    chosen: &mut Vec<ComponentSpec>,
    emit: &mut dyn FnMut(&[ComponentSpec]),
) {
    if chosen.len() >= shape.min_cycles {
        emit(chosen);
    }
    if chosen.len() == shape.max_cycles {
        return;
    }
    for i in from..pool.len() {
        if pool[i].size <= room {
            chosen.push(pool[i]);
            extend_multisets(pool, i, room - pool[i].size, shape, chosen, emit);
            chosen.pop();
        }
    }
}
