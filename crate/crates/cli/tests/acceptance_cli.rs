//! Acceptance criterion 10: byte-stable golden JSON from the CLI on the
//! three named fixtures, with the whole suite comfortably inside the time
//! budget.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schmidt3"))
}

fn run(args: &[&str]) -> (String, i32) {
    let out = bin()
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("spawn schmidt3");
    (
        String::from_utf8(out.stdout).expect("utf8"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_10_golden_cli_output() {
    let start = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();

    for fixture in ["ghz", "w", "basis000"] {
        for cmd in ["canon", "classify", "invariants"] {
            let file = format!("tests/fixtures/{fixture}.json");
            let (first, code) = run(&[cmd, &file]);
            let (second, _) = run(&[cmd, &file]);
            let golden_path = Path::new(env!("CARGO_MANIFEST_DIR"))
                .join(format!("tests/golden/{cmd}_{fixture}.json"));
            let golden = std::fs::read_to_string(&golden_path).expect("golden file");
            if code != 0 || first != second || first != golden {
                pass = false;
                notes.push(format!(
                    "{cmd} {fixture}: exit {code}, stable {}, matches golden {}",
                    first == second,
                    first == golden
                ));
            }
        }
    }

    let elapsed = start.elapsed();
    if elapsed.as_secs() >= 60 {
        pass = false;
        notes.push(format!("suite took {elapsed:?}"));
    }
    println!(
        "ACCEPTANCE 10: {} - byte-stable golden CLI JSON ({})",
        if pass { "PASS" } else { "FAIL" },
        if pass {
            format!("9 command/fixture pairs, {:.2}s", elapsed.as_secs_f64())
        } else {
            notes.join("; ")
        }
    );
    assert!(pass, "{notes:?}");
}
