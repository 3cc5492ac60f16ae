#ifndef HOMALG_CLI_HPP
#define HOMALG_CLI_HPP

namespace homalg::cli {

/// Full command-line entry point (validate / cohomology / op / verify /
/// twist). Returns the process exit code: 0 on success, 1 when validation
/// or an identity fails, 2 on usage or schema errors.
int run(int argc, const char* const* argv);

}  // namespace homalg::cli

#endif
