use std::path::Path;

use segcover_cli::doc::SolutionDocument;
use segcover_cli::{run, run_with_stdin, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str], stdin: &str) -> Out {
    let (mut o, mut e) = (Vec::new(), Vec::new());
    let argv = std::iter::once("segcover").chain(args.iter().copied());
    let code = run_with_stdin(argv, &mut stdin.as_bytes(), &mut o, &mut e);
    Out { code, stdout: String::from_utf8(o).unwrap(), stderr: String::from_utf8(e).unwrap() }
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const TWO: &str = "0 0 4 4\n6 0 10 4\n";

#[test]
fn cover_json_document() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.txt", TWO);
    let r = call(&["cover", "--input", &two, "--format", "json"], "");
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let d = SolutionDocument::from_json(&r.stdout).unwrap();
    assert_eq!(d.problem, "cover");
    assert_eq!(d.sigma, 4.0);
    assert_eq!(d.config, 1);
    assert_eq!(d.instance.n, 2);
    assert_eq!((d.squares[0].min_x, d.squares[1].min_x), (0.0, 6.0));
    assert!(d.disks.is_none());
}

#[test]
fn json_round_trip_is_byte_identical() {
    for cmd in ["cover", "hit", "cover-restricted", "two-center"] {
        let r = call(&[cmd, "--format", "json"], "0 0 4 4\n6 0 10 4\n1 3 9.5 0.25\n");
        assert_eq!(r.code, EXIT_OK);
        let text = r.stdout.trim_end();
        let again = SolutionDocument::from_json(text).unwrap().to_json();
        assert_eq!(text, again);
    }
}

#[test]
fn text_line_format() {
    let r = call(&["cover"], TWO);
    assert_eq!(r.stdout, "sigma=4 config=1 s1=(0,0,4) s2=(6,0,4)\n");
    let r = call(&["cover-restricted"], "0 0 10 4\n");
    assert!(r.stdout.starts_with("sigma=10 "), "{}", r.stdout);
}

#[test]
fn two_center_radius_and_bound() {
    let r = call(&["two-center", "--mode", "cover"], TWO);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("radius=2.82842712 lower_bound=2 "), "{}", r.stdout);
    let d = SolutionDocument::from_json(&call(&["two-center", "--format", "json"], TWO).stdout).unwrap();
    let disks = d.disks.unwrap();
    assert!((disks[0].radius - 2.8284271).abs() < 1e-7);
    assert_eq!(disks[0].lower_bound, 2.0);
    assert_eq!((disks[0].center_x, disks[0].center_y), (2.0, 2.0));
}

#[test]
fn verify_reports_pass() {
    for cmd in ["cover", "hit", "cover-restricted", "two-center"] {
        let r = call(&[cmd, "--verify"], "0 0 4 4\n6 0 10 4\n1 3 9.5 0.25\n5 5 5 5\n");
        assert_eq!(r.code, EXIT_OK, "{cmd}: {}", r.stderr);
        assert!(r.stderr.contains("verify: PASS"));
    }
    let r = call(&["two-center", "--mode", "hit", "--verify"], TWO);
    assert_eq!(r.code, EXIT_OK);
    assert_ne!(EXIT_INFEASIBLE, EXIT_OK);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(call(&["cover", "--bogus"], TWO).code, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"], TWO).code, EXIT_USAGE);
    assert_eq!(call(&[], "").code, EXIT_USAGE);
    let r = call(&["cover"], "# comment\n");
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("empty instance"));
    let r = call(&["cover"], "0 0 x 4\n");
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("line 1"), "{}", r.stderr);
    assert_eq!(call(&["cover", "--input", "/nonexistent/file"], "").code, EXIT_USAGE);
    assert_eq!(call(&["gen", "--n", "3", "--svg", "x.svg"], "").code, EXIT_USAGE);
    assert_eq!(call(&["cover", "--tolerance", "-1"], TWO).code, EXIT_USAGE);
    assert_eq!(call(&["--help"], "").code, EXIT_OK);
}

#[test]
fn generator_is_deterministic() {
    let a = call(&["gen", "--n", "1000", "--seed", "7"], "");
    let b = call(&["gen", "--n", "1000", "--seed", "7"], "");
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.lines().count(), 1000);
    assert_ne!(a.stdout, call(&["gen", "--n", "1000", "--seed", "8"], "").stdout);
    let c = call(&["gen", "--n", "50", "--seed", "7", "--clustered"], "");
    assert_eq!(c.stdout, call(&["gen", "--n", "50", "--seed", "7", "--clustered"], "").stdout);
    // The generated text solves as-is.
    assert_eq!(call(&["cover", "--verify"], &a.stdout).code, EXIT_OK);
}

#[test]
fn svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(dir.path(), "two.txt", TWO);
    let svg = dir.path().join("two.svg");
    let s = svg.to_str().unwrap();
    assert_eq!(call(&["cover", "--input", &two, "--svg", s], "").code, EXIT_OK);
    let body = std::fs::read_to_string(&svg).unwrap();
    assert!(body.starts_with("<?xml"));
    assert_eq!(body.matches("<rect x=").count(), 2);
    assert_eq!(body.matches(r#"width="304" height="304""#).count(), 2, "two equal 4x4 squares");
    assert_eq!(body.matches("<polyline").count(), 2);
    assert!(body.contains("stroke-dasharray"));
    // Deterministic.
    assert_eq!(call(&["cover", "--input", &two, "--svg", s], "").code, EXIT_OK);
    assert_eq!(body, std::fs::read_to_string(&svg).unwrap());

    let point = write(dir.path(), "p.txt", "5 5 5 5\n");
    assert_eq!(call(&["hit", "--input", &point, "--svg", s], "").code, EXIT_OK);
    let body = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(body.matches(r#"r="4""#).count(), 2, "zero squares render as two markers");

    assert_eq!(call(&["two-center", "--input", &two, "--svg", s], "").code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches("<circle").count(), 2);
    assert_eq!(call(&["cover", "--input", &two, "--svg", "/nonexistent/dir/x.svg"], "").code, EXIT_USAGE);
}

#[test]
fn oracle_command() {
    let r = call(&["oracle", "--mode", "hit"], "0 0 0 10\n10 0 10 10\n3 5 7 5\n");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.starts_with("sigma=3"), "{}", r.stdout);
    assert!(call(&["oracle", "--mode", "cover-restricted"], TWO).stdout.starts_with("sigma=4 "));
    assert!(call(&["oracle", "--mode", "two-center"], "0 0 2 2\n").stdout.starts_with("radius=1.41421356"));
    let many = "0 0 1 1\n".repeat(13);
    assert_eq!(call(&["oracle", "--mode", "hit"], &many).code, EXIT_USAGE);
}

#[test]
fn run_uses_real_stdin_signature() {
    // `run` itself is only smoke-tested with an argument error, which never
    // touches standard input.
    let (mut o, mut e) = (Vec::new(), Vec::new());
    assert_eq!(run(["segcover", "cover", "--format", "yaml"], &mut o, &mut e), EXIT_USAGE);
}
