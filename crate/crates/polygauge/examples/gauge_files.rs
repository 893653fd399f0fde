//! Round-trip spaces and operators through the JSON file formats.
//!
//! Run with: cargo run --example gauge_files

use polygauge::gauge::fixtures;
use polygauge::io;
use polygauge::operators::LinearOperator;
use polygauge::scalar::int;

fn main() -> polygauge::Result<()> {
    let dir = std::env::temp_dir().join("polygauge-example");
    std::fs::create_dir_all(&dir).expect("temp dir is writable");

    let gauge_path = dir.join("referee_plane.json");
    io::gauge_to_file(&fixtures::referee_plane(), &gauge_path)?;
    println!("wrote {}", gauge_path.display());
    println!("{}", std::fs::read_to_string(&gauge_path).unwrap());

    let loaded = io::gauge_from_file(&gauge_path)?;
    assert_eq!(loaded, fixtures::referee_plane());

    let op = LinearOperator::new(
        vec![vec![int(0), int(1)]],
        fixtures::referee_plane(),
        fixtures::upper_real(),
    )?;
    let op_path = dir.join("row.json");
    io::operator_to_file(&op, &op_path)?;
    println!("wrote {}", op_path.display());
    let back = io::operator_from_file(&op_path)?;
    assert_eq!(back.matrix(), op.matrix());

    // malformed input gets a field-path diagnostic
    let bad_path = dir.join("bad.json");
    std::fs::write(&bad_path, r#"{"dim": 1, "generators": [["1"],["x/y"]]}"#).unwrap();
    match io::gauge_from_file(&bad_path) {
        Err(e) => println!("rejected bad file: {e}"),
        Ok(_) => unreachable!("the file is malformed"),
    }
    Ok(())
}
