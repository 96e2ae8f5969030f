#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace gckit {

// Named worked examples, runnable from the command line.  Each prints a
// deterministic account of what it computed and returns success.
struct WorkedExample {
  std::string name;
  std::string summary;
  std::function<bool(std::ostream&)> run;
};

const std::vector<WorkedExample>& worked_examples();
const WorkedExample& find_example(const std::string& name);

}  // namespace gckit
