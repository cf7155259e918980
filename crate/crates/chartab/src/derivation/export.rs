//! Table rendering: aligned plain text, JSON and CSV, all with
//! deterministic byte-identical output.

use serde::Serialize;

use crate::classfun::CharacterTable;

#[derive(Serialize)]
struct JsonClass {
    label: String,
    size: u64,
    element_order: u64,
    real: bool,
}

#[derive(Serialize)]
struct JsonRow {
    label: String,
    degree: String,
    values: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable {
    group: String,
    order: u64,
    classes: Vec<JsonClass>,
    characters: Vec<JsonRow>,
}

pub fn table_to_json(table: &CharacterTable) -> String {
    let frame = &table.frame;
    let doc = JsonTable {
        group: frame.name.clone(),
        order: frame.order,
        classes: frame
            .classes
            .iter()
            .map(|c| JsonClass {
                label: c.label.clone(),
                size: c.size,
                element_order: c.element_order,
                real: c.real,
            })
            .collect(),
        characters: table
            .rows
            .iter()
            .zip(table.row_labels.iter())
            .map(|(row, label)| JsonRow {
                label: label.clone(),
                degree: row.degree().to_string(),
                values: row.values().iter().map(ToString::to_string).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("table serializes")
}

pub fn table_to_csv(table: &CharacterTable) -> String {
    let frame = &table.frame;
    let mut out = String::new();
    out.push_str("character");
    for c in &frame.classes {
        out.push(',');
        out.push_str(&c.label);
    }
    out.push('\n');
    for (row, label) in table.rows.iter().zip(table.row_labels.iter()) {
        out.push_str(label);
        for v in row.values() {
            out.push(',');
            let text = v.to_string();
            if text.contains(',') {
                out.push('"');
                out.push_str(&text);
                out.push('"');
            } else {
                out.push_str(&text);
            }
        }
        out.push('\n');
    }
    out
}

/// Aligned text layout: class labels, class sizes, then one row per
/// character.
pub fn table_to_text(table: &CharacterTable) -> String {
    let frame = &table.frame;
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![frame.name.clone()];
    header.extend(frame.classes.iter().map(|c| c.label.clone()));
    grid.push(header);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(frame.classes.iter().map(|c| c.size.to_string()));
    grid.push(sizes);
    for (row, label) in table.rows.iter().zip(table.row_labels.iter()) {
        let mut line = vec![label.clone()];
        line.extend(row.values().iter().map(ToString::to_string));
        grid.push(line);
    }
    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{:>width$}", cell, width = widths[c]));
        }
        out.push('\n');
    }
    out
}
