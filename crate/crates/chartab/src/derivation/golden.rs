//! Golden reference tables bundled with the crate, and the comparison
//! that matches a derived table against them.
//!
//! Golden files are verbatim transcriptions of the bundled reference
//! tables 1 through 8. A table comparison finds a relabeling (a
//! permutation of rows, and of columns within groups that share a class
//! invariant) under which the derived table equals the golden one
//! entry for entry; registered errata cells must instead equal the
//! documented correction, and each such cell is reported as a detected
//! divergence rather than silently patched.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::classfun::CharacterTable;
use crate::cyclotomic::CycNum;
use crate::derivation::log::Divergence;
use crate::derivation::GroupId;
use crate::error::DerivationError;
use crate::permgroup::GroupData;

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenTable {
    pub group: String,
    pub order: u64,
    pub source_table: u32,
    pub classes: Vec<String>,
    pub characters: Vec<GoldenRow>,
    #[serde(default)]
    pub errata: Vec<GoldenErratum>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenRow {
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenErratum {
    pub id: String,
    pub character: String,
    pub class: String,
    pub printed: String,
    pub corrected: String,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenClasses {
    pub group: String,
    pub order: u64,
    pub source_table: u32,
    pub classes: Vec<GoldenClassEntry>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenClassEntry {
    pub label: String,
    pub size: u64,
    pub element_order: u64,
    pub real: bool,
}

pub fn load_table(id: GroupId) -> GoldenTable {
    let text = match id {
        GroupId::G9 => include_str!("../../golden/table_g9.json"),
        GroupId::G10 => include_str!("../../golden/table_g10.json"),
        GroupId::G11 => include_str!("../../golden/table_g11.json"),
        GroupId::G12 => include_str!("../../golden/table_g12.json"),
    };
    serde_json::from_str(text).expect("bundled golden table parses")
}

pub fn load_classes(id: GroupId) -> GoldenClasses {
    let text = match id {
        GroupId::G9 => include_str!("../../golden/classes_g9.json"),
        GroupId::G10 => include_str!("../../golden/classes_g10.json"),
        GroupId::G11 => include_str!("../../golden/classes_g11.json"),
        GroupId::G12 => include_str!("../../golden/classes_g12.json"),
    };
    serde_json::from_str(text).expect("bundled golden classes parse")
}

#[derive(Clone, Debug, Default)]
pub struct ClassesComparison {
    pub matched: bool,
    pub mismatches: Vec<String>,
}

/// Compares computed conjugacy class data against a golden class table:
/// group order, class count, and the multiset of (type, size, element
/// order, realness). Subscript letters are conventions and are compared
/// only as multiplicities per cycle type.
pub fn compare_classes(g: &GroupData, golden: &GoldenClasses) -> ClassesComparison {
    let mut cmp = ClassesComparison {
        matched: true,
        mismatches: Vec::new(),
    };
    if g.order() != golden.order {
        cmp.mismatches
            .push(format!("order {} != {}", g.order(), golden.order));
    }
    if g.classes().len() != golden.classes.len() {
        cmp.mismatches.push(format!(
            "{} classes != {}",
            g.classes().len(),
            golden.classes.len()
        ));
    }
    let strip = |label: &str| -> String {
        label.split('_').next().unwrap_or(label).to_string()
    };
    let mut computed: BTreeMap<(String, u64, u64, bool), u32> = BTreeMap::new();
    for c in g.classes() {
        *computed
            .entry((strip(&c.label), c.size, c.element_order, c.real))
            .or_insert(0) += 1;
    }
    let mut expected: BTreeMap<(String, u64, u64, bool), u32> = BTreeMap::new();
    for c in &golden.classes {
        *expected
            .entry((strip(&c.label), c.size, c.element_order, c.real))
            .or_insert(0) += 1;
    }
    if computed != expected {
        for (key, n) in &expected {
            if computed.get(key) != Some(n) {
                cmp.mismatches.push(format!(
                    "expected {n} classes of type {} size {} order {} real {}, found {}",
                    key.0,
                    key.1,
                    key.2,
                    key.3,
                    computed.get(key).copied().unwrap_or(0)
                ));
            }
        }
        for (key, n) in &computed {
            if !expected.contains_key(key) {
                cmp.mismatches.push(format!(
                    "unexpected {n} classes of type {} size {} order {} real {}",
                    key.0, key.1, key.2, key.3
                ));
            }
        }
    }
    cmp.matched = cmp.mismatches.is_empty();
    cmp
}

#[derive(Clone, Debug, Default)]
pub struct TableComparison {
    pub matched: bool,
    /// Derived row label -> golden row label.
    pub row_mapping: Vec<(String, String)>,
    /// Derived class label -> golden class label.
    pub column_mapping: Vec<(String, String)>,
    /// One entry per errata cell, recording printed vs derived value.
    pub detected_errata: Vec<Divergence>,
    pub mismatches: Vec<String>,
}

/// Matches the derived table against a golden table entry for entry.
///
/// Rows may be permuted freely; columns only within groups sharing the
/// same cycle type (the subscript letters are conventions). Errata cells
/// must match the documented corrections and are reported as detected
/// divergences.
pub fn compare_table(
    table: &CharacterTable,
    golden: &GoldenTable,
) -> Result<TableComparison, DerivationError> {
    let frame = &table.frame;
    let mut cmp = TableComparison::default();
    if frame.order != golden.order {
        cmp.mismatches
            .push(format!("order {} != {}", frame.order, golden.order));
        return Ok(cmp);
    }
    if frame.len() != golden.classes.len() || table.rows.len() != golden.characters.len() {
        cmp.mismatches.push("shape mismatch".into());
        return Ok(cmp);
    }
    let n = frame.len();
    // Corrected golden value grid plus the errata positions.
    let mut grid: Vec<Vec<CycNum>> = Vec::new();
    for row in &golden.characters {
        let parsed: Vec<CycNum> = row
            .values
            .iter()
            .map(|s| s.parse().map_err(DerivationError::Cyc))
            .collect::<Result<_, _>>()?;
        grid.push(parsed);
    }
    let class_pos = |label: &str| golden.classes.iter().position(|c| c == label);
    let row_pos = |label: &str| golden.characters.iter().position(|c| c.label == label);
    let mut errata_cells: Vec<(usize, usize, &GoldenErratum)> = Vec::new();
    for e in &golden.errata {
        let (Some(r), Some(c)) = (row_pos(&e.character), class_pos(&e.class)) else {
            cmp.mismatches
                .push(format!("erratum refers to unknown cell {}/{}", e.character, e.class));
            return Ok(cmp);
        };
        let printed: CycNum = e.printed.parse().map_err(DerivationError::Cyc)?;
        let corrected: CycNum = e.corrected.parse().map_err(DerivationError::Cyc)?;
        if grid[r][c] != printed {
            cmp.mismatches.push(format!(
                "erratum at {}/{} lists printed value {} but the golden file holds {}",
                e.character, e.class, printed, grid[r][c]
            ));
            return Ok(cmp);
        }
        grid[r][c] = corrected;
        errata_cells.push((r, c, e));
    }
    // Column groups: derived classes and golden classes share base labels.
    let strip = |label: &str| -> String {
        label.split('_').next().unwrap_or(label).to_string()
    };
    let mut groups: BTreeMap<String, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (i, c) in frame.classes.iter().enumerate() {
        groups.entry(strip(&c.label)).or_default().0.push(i);
    }
    for (j, c) in golden.classes.iter().enumerate() {
        groups.entry(strip(c)).or_default().1.push(j);
    }
    for (base, (a, b)) in &groups {
        if a.len() != b.len() {
            cmp.mismatches
                .push(format!("class type {base}: {} vs {} classes", a.len(), b.len()));
            return Ok(cmp);
        }
    }
    let group_list: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();

    // Try every combination of within-group permutations (groups have at
    // most three members, so this is at most a handful of combinations).
    let mut assignments: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for (derived, goldens) in &group_list {
        let perms = permutations(goldens.len());
        let mut next = Vec::new();
        for partial in &assignments {
            for perm in &perms {
                let mut col_map = partial.clone();
                for (k, &gslot) in perm.iter().enumerate() {
                    col_map.push((derived[k], goldens[gslot]));
                }
                next.push(col_map);
            }
        }
        assignments = next;
    }

    for pairs in &assignments {
        // Derived -> golden column bijection.
        let mut col_of_derived = vec![usize::MAX; n];
        for &(d, g) in pairs {
            col_of_derived[d] = g;
        }
        if let Some(rows) = try_match_rows(table, &grid, &col_of_derived) {
            cmp.matched = true;
            cmp.column_mapping = (0..n)
                .map(|d| {
                    (
                        frame.classes[d].label.clone(),
                        golden.classes[col_of_derived[d]].clone(),
                    )
                })
                .collect();
            cmp.row_mapping = rows
                .iter()
                .enumerate()
                .map(|(d, &g)| {
                    (
                        table.row_labels[d].clone(),
                        golden.characters[g].label.clone(),
                    )
                })
                .collect();
            // Report each erratum cell: derived value vs printed value.
            for &(gr, gc, e) in &errata_cells {
                let d_row = rows.iter().position(|&g| g == gr).expect("matched row");
                let d_col = col_of_derived
                    .iter()
                    .position(|&g| g == gc)
                    .expect("matched column");
                cmp.detected_errata.push(Divergence {
                    id: e.id.clone(),
                    location: format!(
                        "reference table {} row {} class {}",
                        golden.source_table, e.character, e.class
                    ),
                    printed: e.printed.clone(),
                    computed: table.rows[d_row].value(d_col).to_string(),
                    note: e.note.clone(),
                });
            }
            return Ok(cmp);
        }
    }
    cmp.mismatches
        .push("no relabeling matches the derived table to the golden table".into());
    Ok(cmp)
}

/// Greedy row matching: under a fixed column bijection rows must agree
/// entrywise; returns derived-row -> golden-row when a bijection exists.
fn try_match_rows(
    table: &CharacterTable,
    grid: &[Vec<CycNum>],
    col_of_derived: &[usize],
) -> Option<Vec<usize>> {
    let mut used = vec![false; grid.len()];
    let mut mapping = vec![usize::MAX; table.rows.len()];
    for (d, row) in table.rows.iter().enumerate() {
        let mut found = None;
        'golden: for (g, grow) in grid.iter().enumerate() {
            if used[g] {
                continue;
            }
            for (dc, v) in row.values().iter().enumerate() {
                if &grow[col_of_derived[dc]] != v {
                    continue 'golden;
                }
            }
            found = Some(g);
            break;
        }
        mapping[d] = found?;
        used[mapping[d]] = true;
    }
    Some(mapping)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}
