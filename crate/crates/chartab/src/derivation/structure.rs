//! Structural corollaries read off a finished character table: character
//! kernels, the normal-subgroup lattice they reveal, and simplicity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classfun::CharacterTable;
use crate::cyclotomic::CycNum;

#[derive(Clone, Debug, Serialize)]
pub struct KernelEntry {
    pub row: String,
    pub degree: String,
    pub kernel_classes: Vec<String>,
    pub kernel_order: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub group: String,
    pub order: u64,
    /// Kernel data for every nontrivial row.
    pub kernels: Vec<KernelEntry>,
    /// Orders of the distinct proper nontrivial normal subgroups visible
    /// as kernels.
    pub proper_kernel_orders: Vec<u64>,
    pub simple: bool,
    /// For an index-2 kernel: true when no class of element order 2 lies
    /// outside it (the non-split witness).
    pub index_two_nonsplit_witness: Option<bool>,
    pub verdict: String,
}

pub fn structure_report(table: &CharacterTable) -> StructureReport {
    let frame = &table.frame;
    let trivial = vec![CycNum::one(); frame.len()];
    let mut kernels = Vec::new();
    let mut proper: Vec<BTreeSet<usize>> = Vec::new();
    for (ri, row) in table.rows.iter().enumerate() {
        if row.values() == trivial.as_slice() {
            continue;
        }
        let classes = row.kernel_classes();
        let order: u64 = classes.iter().map(|&c| frame.classes[c].size).sum();
        kernels.push(KernelEntry {
            row: table.row_labels[ri].clone(),
            degree: row.degree().to_string(),
            kernel_classes: classes
                .iter()
                .map(|&c| frame.classes[c].label.clone())
                .collect(),
            kernel_order: order,
        });
        if order > 1 && order < frame.order && !proper.contains(&classes) {
            proper.push(classes);
        }
    }
    let simple = proper.is_empty();
    let proper_kernel_orders: Vec<u64> = proper
        .iter()
        .map(|k| k.iter().map(|&c| frame.classes[c].size).sum())
        .collect();
    let mut index_two_nonsplit_witness = None;
    let mut verdict = if simple {
        format!(
            "simple: all {} nontrivial irreducibles faithful",
            kernels.len()
        )
    } else {
        format!(
            "not simple: proper normal subgroups of order {:?} appear as kernels",
            proper_kernel_orders
        )
    };
    if proper.len() == 1 && 2 * proper_kernel_orders[0] == frame.order {
        let k = &proper[0];
        let no_outside_involution = frame
            .classes
            .iter()
            .enumerate()
            .all(|(c, fc)| fc.element_order != 2 || k.contains(&c));
        index_two_nonsplit_witness = Some(no_outside_involution);
        verdict = format!(
            "unique proper normal subgroup of order {} and index 2; {}",
            proper_kernel_orders[0],
            if no_outside_involution {
                "no involutions outside it, so the extension by it is non-split"
            } else {
                "involutions exist outside it"
            }
        );
    }
    StructureReport {
        group: frame.name.clone(),
        order: frame.order,
        kernels,
        proper_kernel_orders,
        simple,
        index_two_nonsplit_witness,
        verdict,
    }
}
