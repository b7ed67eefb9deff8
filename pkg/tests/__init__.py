"""Azure Provisioner test suite."""