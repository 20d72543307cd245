import { spawn } from "node:child_process";

export interface CliResult {
  code: number;
  stdout: string;
  stderr: string;
}

/**
 * Command line used to reach the extph CLI.  Defaults to the module runner of
 * the installed Python package; override with EXTPH_CLI (whitespace-split),
 * e.g. EXTPH_CLI="/usr/local/bin/extph".
 */
export function cliCommand(): string[] {
  const env = process.env.EXTPH_CLI;
  if (env && env.trim().length > 0) {
    return env.trim().split(/\s+/);
  }
  return ["python3", "-m", "extph.cli"];
}

/** Run one CLI invocation and capture its streams (never throws on exit code). */
export function runCli(args: string[]): Promise<CliResult> {
  const [prog, ...pre] = cliCommand();
  return new Promise((resolve, reject) => {
    const child = spawn(prog!, [...pre, ...args], { stdio: ["ignore", "pipe", "pipe"] });
    let stdout = "";
    let stderr = "";
    child.stdout.on("data", (chunk) => (stdout += chunk));
    child.stderr.on("data", (chunk) => (stderr += chunk));
    child.on("error", reject);
    child.on("close", (code) => resolve({ code: code ?? -1, stdout, stderr }));
  });
}
