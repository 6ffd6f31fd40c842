use chern_endo::report::{run_sweep, write_rows, OutputFormat, SweepSpec, CSV_COLUMNS};
use chern_endo::ReportNote;
use serde_json::Value;

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/schema/report_row.schema.json"
    ))
    .unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn csv_columns_match_schema() {
    let s = schema();
    let cols: Vec<&str> = s["x-csv-columns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(cols, CSV_COLUMNS);
    let required: Vec<&str> = s["required"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(required, CSV_COLUMNS);
}

#[test]
fn note_vocabulary_matches_schema() {
    let s = schema();
    let notes: Vec<&str> = s["properties"]["note"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    for note in [
        ReportNote::AllEndomorphisms,
        ReportNote::PolarizedOnly,
        ReportNote::QuadricHypersurface,
        ReportNote::BoundNotExceeded,
    ] {
        assert!(notes.contains(&note.as_str()), "{note}");
    }
    assert_eq!(notes.len(), 4);
}

#[test]
fn emitted_json_rows_have_exactly_the_schema_fields() {
    let s = schema();
    let props = s["properties"].as_object().unwrap();
    let spec = SweepSpec {
        dim_range: (2, 3),
        codim_max: 2,
        degree_range: (2, 3),
        ..Default::default()
    };
    let rows = run_sweep(&spec, None).unwrap();
    let mut buf = Vec::new();
    write_rows(&rows, OutputFormat::Json, &mut buf).unwrap();
    let emitted: Value = serde_json::from_slice(&buf).unwrap();
    for row in emitted.as_array().unwrap() {
        let obj = row.as_object().unwrap();
        assert_eq!(obj.len(), props.len());
        for (key, value) in obj {
            let prop = &props[key];
            match prop["type"].as_str() {
                Some("integer") => assert!(value.is_u64()),
                Some("string") => assert!(value
                    .as_str()
                    .unwrap()
                    .chars()
                    .all(|c| c.is_ascii_digit() || c == '-')),
                Some("array") => assert!(value.as_array().unwrap().iter().all(Value::is_u64)),
                _ => assert!(
                    prop["enum"].as_array().unwrap().contains(value),
                    "{key}={value}"
                ),
            }
        }
    }
}
