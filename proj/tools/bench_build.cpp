// Times build_cell_graph on one shape and writes a small report.
#include <sys/resource.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wcell/cell_builder.hpp"
#include "wcell/tableau.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cell builder benchmark"};
  std::string shape = "5,5,3,3";
  std::string report;
  app.add_option("--shape", shape, "partition as column lengths");
  app.add_option("--report", report, "append a markdown row here");
  CLI11_PARSE(app, argc, argv);

  wcell::Partition lambda = wcell::Partition::parse(shape);
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  wcell::CellBuilder builder(lambda);
  auto t1 = clock::now();
  builder.run();
  auto t2 = clock::now();

  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  double setup = std::chrono::duration<double>(t1 - t0).count();
  double dp = std::chrono::duration<double>(t2 - t1).count();
  double peak_mb = static_cast<double>(ru.ru_maxrss) / 1024.0;

  std::cout << "shape " << lambda.to_string() << "\n"
            << "vertices " << builder.size() << "\n"
            << "nonzero mu " << builder.table().nonzero() << "\n"
            << "enumerate+seed s " << setup << "\n"
            << "recursion s " << dp << "\n"
            << "peak rss MB " << peak_mb << "\n";
  if (!report.empty()) {
    std::ofstream out(report, std::ios::app);
    out << "| " << lambda.to_string() << " | " << builder.size() << " | " << builder.table().nonzero() << " | "
        << setup << " | " << dp << " | " << peak_mb << " |\n";
  }
  return 0;
}
