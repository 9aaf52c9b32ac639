#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycgrp {

/// Exit codes: 0 success, 1 a failing verdict, 2 usage or input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             bool color = false);

/// argv entry point; colors stdout when it is a terminal and NO_COLOR is unset.
int cli_main(int argc, char** argv);

}  // namespace cycgrp
