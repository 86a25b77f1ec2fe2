//! Stem-corpus ingestion: one romanized stem per line, `#` starts a comment.

use std::fs;
use std::path::Path;

use sandhi_forge::{tokenize, PhonologyError, Word};

use crate::CliError;

/// Read a stems file: one romanized stem per line, with `#` starting a
/// comment that runs to the end of the line. Blank lines are skipped.
/// Duplicates are kept; order is the file order.
///
/// Errors are data errors: an unreadable file, a symbol outside the
/// alphabet (reported with its `file:line`), or a file with no stems at
/// all.
pub fn ingest_stems(path: &Path) -> Result<Vec<Word>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| CliError::Data(format!("cannot read {}: {err}", path.display())))?;
    let mut stems = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let stem = tokenize(content).map_err(|err| match err {
            PhonologyError::UnknownSymbol { position } => CliError::Data(format!(
                "{}:{line}: unknown symbol at byte {position} in '{content}'",
                path.display()
            )),
            other => CliError::Data(format!("{}:{line}: {other}", path.display())),
        })?;
        stems.push(stem);
    }
    if stems.is_empty() {
        return Err(CliError::Data(format!(
            "empty corpus: {} contains no stems",
            path.display()
        )));
    }
    Ok(stems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_file(dir: &tempfile::TempDir, name: &str, content: &str) -> std::path::PathBuf {
        let path = dir.path().join(name);
        let mut file = fs::File::create(&path).expect("create temp file");
        file.write_all(content.as_bytes()).expect("write temp file");
        path
    }

    #[test]
    fn reads_stems_and_skips_comments_and_blanks() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_file(
            &dir,
            "stems.txt",
            "# header comment\nmaram\n\npaTi # step\nkal\n",
        );
        let stems = ingest_stems(&path).unwrap();
        let rendered: Vec<String> = stems.iter().map(|w| w.to_string()).collect();
        assert_eq!(rendered, ["maram", "paTi", "kal"]);
    }

    #[test]
    fn duplicate_lines_are_kept_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_file(&dir, "stems.txt", "pU\npU\npU\n");
        assert_eq!(ingest_stems(&path).unwrap().len(), 3);
    }

    #[test]
    fn unknown_symbol_is_a_data_error_with_file_and_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_file(&dir, "stems.txt", "maram\nmar@m\n");
        let err = ingest_stems(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let message = err.to_string();
        assert!(message.contains("stems.txt:2"), "got: {message}");
        assert!(message.contains("unknown symbol"), "got: {message}");
    }

    #[test]
    fn comment_only_file_is_an_empty_corpus() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_file(&dir, "stems.txt", "# nothing here\n\n# still nothing\n");
        let err = ingest_stems(&path).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("empty corpus"));
    }

    #[test]
    fn missing_file_is_a_data_error() {
        let dir = tempfile::tempdir().unwrap();
        let err = ingest_stems(&dir.path().join("absent.txt")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
