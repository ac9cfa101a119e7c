//! JSON form of a product table:
//! `{"n", "provenance", "squares": [±1…], "entries": [[I, J, sign, K]…]}`
//! with entries sorted by `(I, J)`. Output is written by hand, one entry per
//! line, so that identical tables give identical bytes.

use std::fmt::Write;

use clifford_morph::morph::{Entry, ProductTable};
use clifford_morph::{Blade, MorphError, Sign, N_MAX};
use serde::Deserialize;

use crate::error::WorkbenchError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDocument {
    n: usize,
    provenance: String,
    squares: Vec<i64>,
    entries: Vec<[i64; 4]>,
}

pub fn write_table(table: &ProductTable) -> String {
    let squares: Vec<String> = table.generator_squares().iter().map(|s| s.to_i64().to_string()).collect();
    let mut out = String::new();
    out.push_str("{\n");
    writeln!(out, "  \"n\": {},", table.dim()).unwrap();
    let provenance = serde_json::to_string(table.provenance()).expect("strings serialize");
    writeln!(out, "  \"provenance\": {provenance},").unwrap();
    writeln!(out, "  \"squares\": [{}],", squares.join(", ")).unwrap();
    out.push_str("  \"entries\": [\n");
    let total = table.blade_count() * table.blade_count();
    for (i, (a, b, e)) in table.entries().enumerate() {
        let sep = if i + 1 == total { "" } else { "," };
        writeln!(out, "    [{}, {}, {}, {}]{sep}", a.0, b.0, e.sign.to_i64(), e.blade.0).unwrap();
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn read_table(text: &str) -> Result<ProductTable, WorkbenchError> {
    let doc: TableDocument = serde_json::from_str(text).map_err(|e| WorkbenchError::Document(e.to_string()))?;
    let bad = |why: String| Err(WorkbenchError::Document(why));
    if doc.n == 0 || doc.n > N_MAX {
        return bad(format!("n = {} is outside 1..={N_MAX}", doc.n));
    }
    if doc.squares.len() != doc.n || doc.squares.iter().any(|s| Sign::from_i64(*s).is_none()) {
        return bad(format!("squares must be {} entries of 1 or -1", doc.n));
    }
    let count = 1i64 << doc.n;
    let mut entries = Vec::with_capacity(doc.entries.len());
    for (i, [a, b, sign, k]) in doc.entries.iter().copied().enumerate() {
        if [a, b, k].iter().any(|x| !(0..count).contains(x)) {
            return bad(format!("entry {i}: blade index outside 0..{count}"));
        }
        let Some(sign) = Sign::from_i64(sign) else {
            return bad(format!("entry {i}: sign must be 1 or -1"));
        };
        let expected = i as i64;
        if a * count + b != expected {
            return Err(MorphError::EntryOrder { a: Blade(a as u32), b: Blade(b as u32) }.into());
        }
        entries.push(Entry::new(sign, Blade(k as u32)));
    }
    let table = ProductTable::from_dense_entries(doc.n, doc.provenance, entries)?;
    Ok(table)
}

/// The generator squares a document claims, whether or not its entries agree.
pub fn declared_squares(text: &str) -> Result<Vec<Sign>, WorkbenchError> {
    let doc: TableDocument = serde_json::from_str(text).map_err(|e| WorkbenchError::Document(e.to_string()))?;
    doc.squares
        .iter()
        .map(|s| Sign::from_i64(*s).ok_or_else(|| WorkbenchError::Document("squares must be 1 or -1".into())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use clifford_morph::morph::{base_table, vee_table, verify_isomorphism};
    use clifford_morph::Signature;

    #[test]
    fn one_negative_generator() {
        let text = write_table(&base_table(&Signature::new(0, 1).unwrap()));
        assert_eq!(
            text,
            "{\n  \"n\": 1,\n  \"provenance\": \"Cl(0,1)\",\n  \"squares\": [-1],\n  \"entries\": [\n    [0, 0, 1, 0],\n    [0, 1, 1, 1],\n    [1, 0, 1, 1],\n    [1, 1, -1, 0]\n  ]\n}\n"
        );
    }

    #[test]
    fn round_trip_is_exact() {
        let vee = vee_table(&base_table(&Signature::new(4, 0).unwrap()), 0).unwrap();
        let text = write_table(&vee);
        let back = read_table(&text).unwrap();
        assert!(verify_isomorphism(&vee, &back).unwrap().equal);
        assert_eq!(back.provenance(), vee.provenance());
        assert_eq!(write_table(&back), text);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["squares"], serde_json::json!([1, -1, -1, -1]));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let good = write_table(&base_table(&Signature::new(1, 1).unwrap()));
        assert!(read_table("{}").is_err());
        assert!(read_table(&good.replace("\"n\": 2", "\"n\": 3")).is_err());
        let swapped = good.replacen("[0, 1, 1, 1],\n    [0, 2, 1, 2]", "[0, 2, 1, 2],\n    [0, 1, 1, 1]", 1);
        assert!(matches!(read_table(&swapped), Err(WorkbenchError::Morph(MorphError::EntryOrder { .. }))));
        let not_unital = good.replacen("[0, 1, 1, 1]", "[0, 1, -1, 1]", 1);
        assert!(matches!(read_table(&not_unital), Err(WorkbenchError::Morph(MorphError::NotUnital { .. }))));
    }
}
