use qpath_core::paths::{highest_path, PathContext};
use qpath_core::render::render_path;

fn golden(name: &str, n: u32, i: u32, k: i64) {
    let ctx = PathContext::new(n, i, k).unwrap();
    let got = render_path(&highest_path(ctx), false);
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    if std::env::var_os("QPATH_BLESS").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(got, want, "rendering of {name} drifted");
}

#[test]
fn highest_path_node_one() {
    golden("highest_n3_i1_k0.txt", 3, 1, 0);
}

#[test]
fn highest_path_node_two() {
    golden("highest_n3_i2_k1.txt", 3, 2, 1);
}

#[test]
fn highest_path_node_three() {
    golden("highest_n3_i3_k0.txt", 3, 3, 0);
}
