#pragma once

namespace lienil {

// Exit status: 0 success or consistent, 1 inconsistency found, 2 input error.
int cli_main(int argc, char** argv);

}  // namespace lienil
