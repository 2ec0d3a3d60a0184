//! JSON, CSV and markdown renderings of one report carry the same numbers.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_viralstyle");

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[String]) -> String {
    let out = Command::new(BIN).args(args).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

struct Rendered {
    json: Value,
    csv: Vec<csv::StringRecord>,
    csv_comments: Vec<String>,
    md: String,
}

fn render_all(base: &[String]) -> Rendered {
    let with = |format: &str| {
        let mut args = base.to_vec();
        args.extend(["--format".to_string(), format.to_string()]);
        run(&args)
    };
    let json: Value = serde_json::from_str(&with("json")).unwrap();
    let csv_text = with("csv");
    let csv_comments = csv_text
        .lines()
        .filter(|l| l.starts_with('#'))
        .map(str::to_string)
        .collect();
    let body: String = csv_text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let csv = csv::Reader::from_reader(body.as_bytes())
        .records()
        .map(Result::unwrap)
        .collect();
    Rendered {
        json,
        csv,
        csv_comments,
        md: with("md"),
    }
}

/// Table rows of the markdown output, split into trimmed cells.
fn md_rows(md: &str) -> Vec<Vec<String>> {
    md.lines()
        .filter(|l| l.starts_with("| ") && !l.starts_with("| Class") && !l.starts_with("| Dataset"))
        .map(|l| {
            l.trim_matches('|')
                .split('|')
                .map(|c| c.trim().to_string())
                .collect()
        })
        .collect()
}

fn csv_num(cell: &str) -> Option<f64> {
    (!cell.is_empty()).then(|| cell.parse().unwrap())
}

fn md2(v: Option<f64>) -> String {
    v.map_or_else(|| "—".to_string(), |d| format!("{d:.2}"))
}

fn setup() -> (TempDir, PathBuf) {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("coll");
    run(&[
        "collections".into(),
        "--input".into(),
        fixture("records.jsonl").display().to_string(),
        "--out-dir".into(),
        dir.display().to_string(),
    ]);
    (tmp, dir)
}

fn input_args() -> Vec<String> {
    vec![
        "--input".into(),
        fixture("records.jsonl").display().to_string(),
    ]
}

#[test]
fn dominance_formats_agree() {
    let (_tmp, dir) = setup();
    let mut args = vec!["dominance".to_string()];
    args.extend(input_args());
    args.extend([
        "--target".into(),
        dir.join("downloaded.txt").display().to_string(),
        "--control".into(),
        dir.join("control.txt").display().to_string(),
        "--lexicon".into(),
        "builtin:profile".into(),
    ]);
    let r = render_all(&args);
    let rows = r.json["rows"].as_array().unwrap();
    let md = md_rows(&r.md);
    assert_eq!(rows.len(), r.csv.len());
    assert_eq!(rows.len(), md.len());
    for ((j, c), m) in rows.iter().zip(&r.csv).zip(&md) {
        assert_eq!(j["label"].as_str().unwrap(), &c[0]);
        assert_eq!(j["label"].as_str().unwrap(), m[0]);
        assert_eq!(j["coverage_target"].as_f64(), csv_num(&c[1]));
        assert_eq!(j["coverage_control"].as_f64(), csv_num(&c[2]));
        assert_eq!(j["dominance"].as_f64(), csv_num(&c[3]));
        assert_eq!(j["band"].as_str().unwrap(), &c[4]);
        assert_eq!(j["filtered"].as_bool().unwrap().to_string(), &c[5]);
        assert_eq!(
            format!("{:.4}", j["coverage_target"].as_f64().unwrap()),
            m[1]
        );
        assert_eq!(
            format!("{:.4}", j["coverage_control"].as_f64().unwrap()),
            m[2]
        );
        assert_eq!(md2(j["dominance"].as_f64()), m[3]);
        assert_eq!(j["band"].as_str().unwrap(), m[4]);
    }
    let meta = r.csv_comments[0].strip_prefix("# metadata: ").unwrap();
    let meta: Value = serde_json::from_str(meta).unwrap();
    assert_eq!(meta, r.json["metadata"]);
}

#[test]
fn readability_formats_agree() {
    let (_tmp, dir) = setup();
    let mut args = vec!["readability".to_string()];
    args.extend(input_args());
    args.extend([
        "--control".into(),
        dir.join("control.txt").display().to_string(),
        dir.join("cited.txt").display().to_string(),
        dir.join("downloaded.txt").display().to_string(),
        dir.join("bookmarked.txt").display().to_string(),
    ]);
    let r = render_all(&args);
    let rows = r.json["rows"].as_array().unwrap();
    let md = md_rows(&r.md);
    assert_eq!(rows.len(), 4);
    assert_eq!(rows.len(), r.csv.len());
    assert_eq!(rows.len(), md.len());
    for ((j, c), m) in rows.iter().zip(&r.csv).zip(&md) {
        assert_eq!(j["dataset"].as_str().unwrap(), &c[0]);
        assert_eq!(j["dataset"].as_str().unwrap(), m[0]);
        assert_eq!(j["n"].as_u64().unwrap().to_string(), &c[1]);
        for (k, key) in ["fog_mean", "fog_sd", "flesch_mean", "flesch_sd"]
            .iter()
            .enumerate()
        {
            assert_eq!(j[key].as_f64(), csv_num(&c[3 + k]), "{key}");
            let cell = m[2 + k].trim_end_matches(['*', '†']);
            assert_eq!(format!("{:.2}", j[key].as_f64().unwrap()), cell, "{key}");
        }
        for (offset, key) in [(7, "fog_vs_control"), (15, "flesch_vs_control")] {
            let cmp = &j[key];
            if cmp.is_null() {
                assert!(c.iter().skip(offset).take(8).all(str::is_empty));
                continue;
            }
            assert_eq!(cmp["t"].as_f64(), csv_num(&c[offset]));
            assert_eq!(cmp["t_df"].as_f64(), csv_num(&c[offset + 1]));
            assert_eq!(cmp["t_p"].as_f64(), csv_num(&c[offset + 2]));
            assert_eq!(cmp["marker"].as_str().unwrap(), &c[offset + 3]);
            assert_eq!(cmp["f"].as_f64(), csv_num(&c[offset + 4]));
            assert_eq!(cmp["f_df"][0].as_f64(), csv_num(&c[offset + 5]));
            assert_eq!(cmp["f_df"][1].as_f64(), csv_num(&c[offset + 6]));
            assert_eq!(cmp["f_p"].as_f64(), csv_num(&c[offset + 7]));
        }
        let fog = &j["fog_vs_control"];
        if !fog.is_null() {
            assert!(m[2].ends_with(fog["marker"].as_str().unwrap()));
            let t_cell = format!(
                "{:.2} ({:.2e})",
                fog["t"].as_f64().unwrap(),
                fog["t_p"].as_f64().unwrap()
            );
            assert_eq!(m[6], t_cell);
        }
    }
}

#[test]
fn profile_formats_agree() {
    let (_tmp, dir) = setup();
    let mut args = vec![
        "coach".to_string(),
        fixture("self_abstract.txt").display().to_string(),
    ];
    args.extend(input_args());
    args.extend([
        "--control".into(),
        dir.join("control.txt").display().to_string(),
    ]);
    let r = render_all(&args);
    let j = &r.json;

    let comment = |key: &str| -> String {
        let prefix = format!("# {key}: ");
        r.csv_comments
            .iter()
            .find_map(|l| l.strip_prefix(&prefix).map(str::to_string))
            .unwrap()
    };
    assert_eq!(j["fog"].as_f64(), Some(comment("fog").parse().unwrap()));
    assert_eq!(
        j["flesch"].as_f64(),
        Some(comment("flesch").parse().unwrap())
    );
    assert_eq!(
        j["fraction_met"].as_f64(),
        Some(comment("fraction_met").parse().unwrap())
    );
    assert_eq!(format!("{}/{}", j["met"], j["total"]), comment("met"));
    assert!(r
        .md
        .contains(&format!("- Fog index: {:.2}", j["fog"].as_f64().unwrap())));
    assert!(r.md.contains(&format!(
        "- Flesch index: {:.2}",
        j["flesch"].as_f64().unwrap()
    )));

    let rows = j["rows"].as_array().unwrap();
    let md = md_rows(&r.md);
    assert_eq!(rows.len(), 14);
    assert_eq!(rows.len(), r.csv.len());
    assert_eq!(rows.len(), md.len());
    for ((row, c), m) in rows.iter().zip(&r.csv).zip(&md) {
        assert_eq!(row["label"].as_str().unwrap(), &c[0]);
        assert_eq!(row["target"].as_str().unwrap(), &c[1]);
        assert_eq!(row["coverage_target"].as_f64(), csv_num(&c[2]));
        assert_eq!(row["coverage_control"].as_f64(), csv_num(&c[3]));
        assert_eq!(row["dominance"].as_f64(), csv_num(&c[4]));
        assert_eq!(row["band"].as_str().unwrap(), &c[5]);
        assert_eq!(row["met"].as_bool().unwrap().to_string(), &c[6]);
        assert_eq!(md2(row["dominance"].as_f64()), m[2]);
    }
}

#[test]
fn csv_output_is_written_to_file() {
    let (tmp, dir) = setup();
    let dest = tmp.path().join("dom.csv");
    let mut args = vec!["dominance".to_string()];
    args.extend(input_args());
    args.extend([
        "--target".into(),
        dir.join("cited.txt").display().to_string(),
        "--control".into(),
        dir.join("control.txt").display().to_string(),
        "--format".into(),
        "csv".into(),
        "--output".into(),
        dest.display().to_string(),
    ]);
    assert!(run(&args).is_empty());
    assert!(fs::read_to_string(dest)
        .unwrap()
        .starts_with("# metadata: "));
}
