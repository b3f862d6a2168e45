#include <bnkit/cli.hpp>

int main( int argc, char** argv )
{
  return bnkit::cli::cli_main( argc, argv );
}
