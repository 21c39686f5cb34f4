namespace gradindex {}
