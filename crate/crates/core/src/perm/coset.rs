//! Action on right cosets of a subgroup.

use num_traits::ToPrimitive;

use super::{PermError, Permutation, PermutationGroup};

/// Default cap on the index of a coset action.
pub const INDEX_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Image of `G` acting on the cosets `Hx` by right multiplication; coset 1 is `H`.
    pub image: PermutationGroup,
    /// True iff the core of `H` in `G` is trivial.
    pub faithful: bool,
    pub kernel_order: u64,
}

/// Requires `|G|` within the element-enumeration bound.
pub fn coset_action(
    group: &PermutationGroup,
    sub_generators: &[Permutation],
    element_bound: u64,
) -> Result<CosetAction, PermError> {
    let sub = group.subgroup(sub_generators.to_vec())?;
    let go = group.order_u64();
    let index = go / sub.order_u64();
    if index > INDEX_BOUND {
        return Err(PermError::IndexBound { index, bound: INDEX_BOUND });
    }
    let elements = group.elements(element_bound)?;
    let n = elements.len();
    let degree = group.degree();
    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut buf = vec![0u32; degree];
    // Cosets are orbits of H acting on G by left multiplication, H first.
    let id = elements.identity_index();
    let mut order_starts: Vec<usize> = vec![id];
    order_starts.extend((0..n).filter(|&i| i != id));
    for start in order_starts {
        if coset_of[start] != UNSET {
            continue;
        }
        let cid = reps.len() as u32;
        reps.push(start);
        coset_of[start] = cid;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let gx = elements.get(x);
            for h in sub.generators() {
                // h * x: apply h first
                for i in 0..degree {
                    buf[i] = gx[h.image(i)];
                }
                let idx = elements.index_of(&buf).unwrap();
                if coset_of[idx] == UNSET {
                    coset_of[idx] = cid;
                    stack.push(idx);
                }
            }
        }
    }
    let mut image_gens = Vec::with_capacity(group.generators().len());
    for g in group.generators() {
        let mut images = Vec::with_capacity(reps.len());
        for &r in &reps {
            let gr = elements.get(r);
            for i in 0..degree {
                buf[i] = g.images()[gr[i] as usize];
            }
            images.push(coset_of[elements.index_of(&buf).unwrap()]);
        }
        image_gens.push(Permutation::from_images(images)?);
    }
    let image = PermutationGroup::new(reps.len(), image_gens)?;
    let image_order = image.order().to_u64().unwrap();
    let kernel_order = go / image_order;
    Ok(CosetAction { image, faithful: kernel_order == 1, kernel_order })
}
