//! Algebra documents: export, edit, re-import, and run the CLI in-process.

use hopfcoh::cli::{builtin_document, run};
use hopfcoh::document::AlgebraDocument;
use hopfcoh::Error;
use hopfcoh::FieldSpec;

fn main() -> hopfcoh::Result<()> {
    let doc = builtin_document("sweedler", FieldSpec::Rationals)?;
    let text = doc.to_json();
    println!("sweedler document: {} bytes, ideals {:?}", text.len(), doc.ideal_names());
    let back = AlgebraDocument::from_json(&text)?;
    println!("round trip exact: {}", back.to_json() == text);

    let mut broken = back.clone();
    broken.antipode[1][1] = ("1".into(), "1".into());
    match broken.hopf() {
        Err(Error::HopfAxioms(v)) => println!("edited antipode fails: {}", v.iter().map(|x| x.check.as_str()).collect::<Vec<_>>().join(", ")),
        other => println!("unexpected: {other:?}"),
    }

    let out = run(["hopfcoh", "cohomology", "builtin:sweedler", "--ideal", "one_minus_g", "--max-degree", "2"]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
    Ok(())
}
