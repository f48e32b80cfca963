//! Structure reports for finite groups given by presentations.

use serde::{Deserialize, Serialize};

use super::groups::{alpha, alpha_s};
use crate::fpgroup::{
    abelian_invariants, abelianization_order, coset_enumerate, elementary_divisors, regular_rep,
    EnumerationError, Presentation, StructureTag, Word,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    /// Order of the group, or of its quotient by `central` when one is given.
    pub order: u64,
    /// The relator added before enumeration, in the text format.
    pub central_quotient: Option<String>,
    pub abelian_invariants: Vec<u64>,
    pub elementary_divisors: Vec<u64>,
    pub abelian: bool,
    pub derived_order: u64,
    pub derived_perfect: bool,
    pub derived_involutions: usize,
    pub derived_tag: StructureTag,
    pub tag: StructureTag,
    pub generator_orders: Vec<u64>,
    pub centralizer_of_derived_order: u64,
    pub centralizer_of_derived_tag: StructureTag,
    pub centralizer_meet_derived: u64,
    /// `|C| |G'| / |C meet G'| == |G|`.
    pub central_product: bool,
    /// Index of the subgroup generated by `a2 a3 a2^-1, a1, a3` (three-generator groups).
    pub index_of_as_a1_a3: Option<u64>,
    /// Present when the report describes a central quotient.
    pub lift_note: Option<String>,
}

/// Enumerates the group (modulo `central`, if given) and collects its structure.
pub fn analyze(
    pres: &Presentation,
    central: Option<&Word>,
    limit: usize,
) -> Result<GroupReport, EnumerationError> {
    let full = match central {
        Some(c) => pres.clone().with([c.clone()]),
        None => pres.clone(),
    };
    let table = coset_enumerate(&full, &[], limit)?;
    let g = regular_rep(&table).map_err(|_| EnumerationError::Overflow(table.index()))?;
    let order = g.order() as u64;
    let inv = abelian_invariants(&full);
    let ab_order = abelianization_order(&inv);
    let d = g.derived_subgroup();
    let c = g.centralizer(&d);
    let meet = c.intersection(&d);
    let gens: Vec<u64> = (0..full.generators())
        .map(|i| g.element_order(&Word::gen(i)))
        .collect();
    let index =
        (full.generators() == 3).then(|| g.subgroup_index(&[alpha_s(), alpha(1), alpha(3)]) as u64);
    Ok(GroupReport {
        order,
        central_quotient: central.map(|c| c.to_string()),
        elementary_divisors: elementary_divisors(&inv),
        abelian: ab_order == Some(order),
        abelian_invariants: inv,
        derived_order: d.order() as u64,
        derived_perfect: d.is_perfect(),
        derived_involutions: d.involution_count(),
        derived_tag: d.identify(),
        tag: g.identify(),
        generator_orders: gens,
        centralizer_of_derived_order: c.order() as u64,
        centralizer_of_derived_tag: c.identify(),
        centralizer_meet_derived: meet.order() as u64,
        central_product: c.order() * d.order() / meet.order() == g.order(),
        index_of_as_a1_a3: index,
        lift_note: central.map(|c| {
            format!(
                "quotient by the central element {c}; when its image in the abelianization has \
                 infinite order, the derived subgroup of the full group equals the one reported"
            )
        }),
    })
}
